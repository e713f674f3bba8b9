#include <gtest/gtest.h>

#include "spva/builtin.hpp"
#include "spva/dsred.hpp"
#include "spva/errors.hpp"
#include "spva/pipeline.hpp"
#include "spva/text.hpp"

using namespace spva;

namespace {

std::unique_ptr<Session> osp22(int zmin = -4, int zmax = 4) {
  Builtin b = builtin("osp22");
  return std::make_unique<Session>(b.algebra, b.reduction, zmin, zmax);
}

SPoly p(const Session& s, const char* text) { return parse_spoly(text, *s.vars()); }

}  // namespace

TEST(Dsred, ZeroGaugeIsIdentity) {
  auto s = osp22();
  LaxOperator L{universal_Q(*s->reduction()), true};
  LaxOperator r = gauge_apply(s->loop(), LoopElem(), L);
  EXPECT_EQ(r.Q, L.Q);
  EXPECT_EQ(r.with_s, L.with_s);
}

TEST(Dsred, Osp22CanonicalForm) {
  auto s = osp22();
  const WPresentation& wp = s->w();
  const auto& g = *s->algebra();
  LoopElem N = LoopElem::single(0, g.index("e2"), p(*s, "-1/4*h1bar")) +
               LoopElem::single(0, g.index("e3"), p(*s, "-1/4*f1bar"));
  EXPECT_EQ(wp.N, N);
  ASSERT_EQ(wp.w.size(), 4u);
  EXPECT_EQ(wp.expr[0], p(*s, "1/2*e1bar"));
  EXPECT_EQ(wp.expr[1], p(*s, "-1/4*h2bar"));
  EXPECT_EQ(wp.expr[2], p(*s, "-1/2*f2bar - 1/4*h1bar' + 1/4*e1bar*f1bar - 1/8*h1bar*h2bar"));
  EXPECT_EQ(wp.expr[3], p(*s, "1/4*f3bar + 1/4*f1bar' - 1/8*f1bar*h1bar - 1/8*f1bar*h2bar"));
}

TEST(Dsred, GaugedOperatorIsCanonical) {
  auto s = osp22();
  const WPresentation& wp = s->w();
  LaxOperator L{universal_Q(*s->reduction()), false};
  EXPECT_EQ(gauge_apply(s->loop(), wp.N, L).Q, wp.Qc);
  LoopElem back, qw = wp.Qc_in_w();
  for (const auto& [k, u] : qw.terms()) back.add(k.first, k.second, wp.expand(u));
  EXPECT_EQ(back, wp.Qc);
}

TEST(Dsred, RewriteGenerators) {
  auto s = osp22();
  const WPresentation& wp = s->w();
  auto r = rewrite_in_w(p(*s, "1/2*e1bar"), wp);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value, SPoly::var(wp.w[0]));
  r = rewrite_in_w(wp.expr[2], wp);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value, SPoly::var(wp.w[2]));
  SPoly mixed = wp.expr[0] * wp.expr[3] + wp.expr[1].D() + Rational(3);
  EXPECT_EQ(to_w(mixed, wp), SPoly::var(wp.w[0]) * SPoly::var(wp.w[3]) + SPoly::var(wp.w[1]).D() + Rational(3));
}

TEST(Dsred, NonInvariantLeavesResidual) {
  auto s = osp22();
  const WPresentation& wp = s->w();
  for (const char* text : {"h1bar", "f2bar"}) {
    SPoly q = p(*s, text);
    EXPECT_FALSE(check_gauge_invariance(q, wp, s->affine1()).empty()) << text;
    EXPECT_FALSE(rewrite_in_w(wp.expr[2] + q, wp).ok()) << text;
    EXPECT_THROW(to_w(q, wp), InvalidData) << text;
  }
}

TEST(Dsred, GeneratorsAreGaugeInvariant) {
  auto s = osp22();
  const WPresentation& wp = s->w();
  for (const auto& e : wp.expr) EXPECT_TRUE(check_gauge_invariance(e, wp, s->affine1()).empty()) << format(e, *s->vars());
  EXPECT_TRUE(check_gauge_invariance(SPoly(Rational(5)), wp, s->affine1()).empty());
  EXPECT_TRUE(check_gauge_invariance(wp.expr[0] * wp.expr[3], wp, s->affine1()).empty());
}

TEST(Dsred, ProjectionDropsPositivePart) {
  auto s = osp22();
  // on the constraint surface nbar is (f|n)
  EXPECT_TRUE(project(*s->reduction(), p(*s, "e3bar")).is_zero());
  EXPECT_EQ(project(*s->reduction(), p(*s, "e2bar")), SPoly(Rational(2)));
  EXPECT_EQ(project(*s->reduction(), p(*s, "e2bar*f1bar + e3bar")), p(*s, "2*f1bar"));
  EXPECT_EQ(project(*s->reduction(), p(*s, "e1bar")), p(*s, "e1bar"));
}

TEST(Dsred, Sl31RewriteTerminates) {
  Builtin b = builtin("sl(3|1)");
  Session s(b.algebra, b.reduction, -5, 5);
  const WPresentation& wp = s.w();
  ASSERT_FALSE(wp.w.empty());
  for (std::size_t t = 0; t < wp.w.size(); ++t) {
    auto r = rewrite_in_w(wp.expr[t], wp);
    ASSERT_TRUE(r.ok()) << t;
    EXPECT_EQ(r.value, SPoly::var(wp.w[t]));
  }
  SPoly sq = wp.expr[0] * wp.expr.back();
  EXPECT_EQ(to_w(sq, wp), SPoly::var(wp.w[0]) * SPoly::var(wp.w.back()));
}

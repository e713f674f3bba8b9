#include "spva/axioms.hpp"

#include <sstream>

#include "spva/bracket.hpp"
#include "spva/text.hpp"

namespace spva {

namespace {

std::string format_cg(const ChiGammaPoly& p, const VariableSet& vars) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "X^" << k.first << "*G^" << k.second << "*(" << format(c, vars) << ")";
  }
  return first ? "0" : out.str();
}

std::string gen_name(const BracketSpec& s, std::size_t i) { return s.vars()->name(s.generators()[i].id); }

}  // namespace

AxiomReport check_skew_symmetry(const BracketSpec& spec) {
  AxiomReport r{"skew-symmetry", 0, {}};
  const std::size_t n = spec.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++r.checked;
      ChiPoly s = skew_substitute(spec.entry(j, i));
      if (bit(spec.generators()[i].parity) & bit(spec.generators()[j].parity)) s = -s;
      ChiPoly res = spec.entry(i, j) - s;
      if (!res.is_zero())
        r.failures.push_back({"skew-symmetry", {gen_name(spec, i), gen_name(spec, j)}, format(res, *spec.vars())});
    }
  }
  return r;
}

ChiGammaPoly jacobi_residual(const BracketSpec& outer, const BracketSpec& inner, std::size_t i, std::size_t j,
                             std::size_t k) {
  const auto& g = outer.generators();
  const Parity pi = g[i].parity;
  const Parity pj = g[j].parity;
  const SPoly ui = SPoly::var(g[i]);
  const SPoly uj = SPoly::var(g[j]);
  const SPoly uk = SPoly::var(g[k]);

  // {u_i chi {u_j gamma u_k}}
  ChiGammaPoly lhs;
  const ChiPoly& jk = inner.entry(j, k);
  for (int n = 0; n <= jk.degree(); ++n) {
    if (jk.coeff(n).is_zero()) continue;
    ChiPoly t = master_bracket(outer, ui, jk.coeff(n));
    bool neg = (n * (bit(pi) + 1)) & 1;
    for (int m = 0; m <= t.degree(); ++m) {
      SPoly c = t.coeff(m);
      if ((n * m) & 1) c = -c;
      lhs.add_term(m, n, neg ? -c : c);
    }
  }

  // (-1)^{p_i+1} {{u_i chi u_j}_{chi+gamma} u_k}
  ChiGammaPoly rhs1;
  const ChiPoly& ij = inner.entry(i, j);
  for (int n = 0; n <= ij.degree(); ++n) {
    if (ij.coeff(n).is_zero()) continue;
    ChiPoly t = master_bracket(outer, ij.coeff(n), uk);
    ChiGammaPoly s = ChiGammaPoly::substitute_sum(t).left_mul_monomial(n, 0);
    bool neg = ((n & 1) + bit(pi) + 1) & 1;
    if (neg) {
      rhs1 -= s;
    } else {
      rhs1 += s;
    }
  }

  // (-1)^{(p_i+1)(p_j+1)} {u_j gamma {u_i chi u_k}}
  ChiGammaPoly rhs2;
  const ChiPoly& ik = inner.entry(i, k);
  for (int n = 0; n <= ik.degree(); ++n) {
    if (ik.coeff(n).is_zero()) continue;
    ChiPoly t = master_bracket(outer, uj, ik.coeff(n));
    bool neg = ((n * (bit(pj) + 1)) + (bit(pi) + 1) * (bit(pj) + 1)) & 1;
    for (int m = 0; m <= t.degree(); ++m) rhs2.add_term(n, m, neg ? -t.coeff(m) : t.coeff(m));
  }

  lhs -= rhs1;
  lhs -= rhs2;
  return lhs;
}

namespace {

AxiomReport jacobi_report(const std::string& name, const BracketSpec& a, const BracketSpec& b, bool mixed) {
  AxiomReport r{name, 0, {}};
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checked;
        ChiGammaPoly res = jacobi_residual(a, b, i, j, k);
        if (mixed) res += jacobi_residual(b, a, i, j, k);
        if (!res.is_zero())
          r.failures.push_back(
              {"Jacobi", {gen_name(a, i), gen_name(a, j), gen_name(a, k)}, format_cg(res, *a.vars())});
      }
  return r;
}

}  // namespace

AxiomReport check_jacobi(const BracketSpec& spec) { return jacobi_report("Jacobi", spec, spec, false); }

CompatibilityReport check_compatibility(const BracketSpec& spec1, const BracketSpec& spec2) {
  if (spec1.generators() != spec2.generators())
    throw std::invalid_argument("compatibility needs two brackets on the same generators");
  CompatibilityReport r;
  AxiomReport s1 = check_skew_symmetry(spec1);
  AxiomReport s2 = check_skew_symmetry(spec2);
  r.skew = {"skew-symmetry", s1.checked + s2.checked, s1.failures};
  r.skew.failures.insert(r.skew.failures.end(), s2.failures.begin(), s2.failures.end());
  r.order0 = jacobi_report("Jacobi eps^0", spec1, spec1, false);
  r.order1 = jacobi_report("Jacobi eps^1", spec1, spec2, true);
  r.order2 = jacobi_report("Jacobi eps^2", spec2, spec2, false);
  return r;
}

}  // namespace spva

#include "spva/pipeline.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "spva/axioms.hpp"
#include "spva/builtin.hpp"
#include "spva/errors.hpp"
#include "spva/hierarchy.hpp"
#include "spva/io.hpp"
#include "spva/text.hpp"

namespace spva {

using nlohmann::ordered_json;

namespace {

const char* kStages[] = {"validate", "axioms", "walgebra", "brackets", "hierarchy", "all"};

const char* parity_name(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

ordered_json check_json(const std::string& name, bool passed, const std::string& detail) {
  ordered_json c;
  c["name"] = name;
  c["passed"] = passed;
  if (!passed) c["detail"] = detail;
  return c;
}

ordered_json axiom_json(const AxiomReport& r, const std::string& axiom) {
  ordered_json j;
  j["axiom"] = axiom;
  j["checked"] = r.checked;
  j["passed"] = r.ok();
  ordered_json f = ordered_json::array();
  for (std::size_t k = 0; k < r.failures.size() && k < 5; ++k) {
    std::string gens;
    for (const auto& g : r.failures[k].generators) gens += (gens.empty() ? "" : ", ") + g;
    f.push_back({{"generators", gens}, {"residual", r.failures[k].residual}});
  }
  if (!r.ok()) {
    j["failures"] = f;
    j["failure_count"] = r.failures.size();
  }
  return j;
}

ordered_json spec_axioms(const std::string& name, const BracketSpec& spec) {
  ordered_json j;
  j["spec"] = name;
  j["reports"] = ordered_json::array({axiom_json(check_skew_symmetry(spec), "skew-symmetry"),
                                      axiom_json(check_jacobi(spec), "Jacobi")});
  return j;
}

ordered_json compat_json(const std::string& name, const BracketSpec& a, const BracketSpec& b) {
  auto c = check_compatibility(a, b);
  ordered_json j;
  j["spec"] = name;
  j["reports"] = ordered_json::array({axiom_json(c.skew, "skew-symmetry"), axiom_json(c.order0, "Jacobi eps^0"),
                                      axiom_json(c.order1, "Jacobi eps^1"), axiom_json(c.order2, "Jacobi eps^2")});
  return j;
}

bool all_passed(const ordered_json& stage) {
  if (stage.contains("checks"))
    for (const auto& c : stage["checks"])
      if (!c["passed"].get<bool>()) return false;
  if (stage.contains("axioms"))
    for (const auto& s : stage["axioms"])
      for (const auto& r : s["reports"])
        if (!r["passed"].get<bool>()) return false;
  return true;
}

class Runner {
 public:
  Runner(const PipelineConfig& c, Session& s) : cfg_(c), s_(s) {
    style_ = c.format == OutputFormat::Latex ? TextStyle::Latex : TextStyle::Plain;
  }

  std::string fmt_poly(const SPoly& p) const { return format(p, *s_.vars(), style_); }
  std::string fmt_chi(const ChiPoly& p) const { return format(p, *s_.vars(), style_); }
  std::string name(std::uint32_t id) const {
    return style_ == TextStyle::Latex ? s_.vars()->latex(id) : s_.vars()->name(id);
  }

  ordered_json validate() {
    const auto& g = *s_.algebra();
    const auto& rd = *s_.reduction();
    ordered_json j;
    j["algebra"] = g.name();
    j["dim"] = g.dim();
    ordered_json basis = ordered_json::array();
    for (const auto& b : g.basis()) basis.push_back({{"name", b.name}, {"parity", parity_name(b.parity)}, {"degree", b.degree}});
    j["basis"] = basis;
    j["i"] = rd.i;
    j["j"] = rd.j;
    ordered_json checks = ordered_json::array();
    for (const auto& c : spva::validate(g).checks) checks.push_back(check_json("algebra: " + c.name, c.passed, c.detail));
    for (const auto& c : validate_reduction(rd).checks)
      checks.push_back(check_json("reduction: " + c.name, c.passed, c.detail));
    auto ss = s_.loop().semisimplicity_failures();
    std::string detail;
    for (const auto& m : ss) detail += (detail.empty() ? "" : "; ") + m;
    checks.push_back(check_json("ad Lambda^2 semisimple", ss.empty(), detail));
    j["checks"] = checks;
    if (ss.empty()) {
      ordered_json pieces = ordered_json::array();
      for (int t = 0; t < s_.loop().period(); ++t) {
        const auto& p = s_.loop().piece(t);
        pieces.push_back({{"grade", t}, {"dim", p.basis.size()}, {"kernel", p.kernel.size()},
                          {"image", p.image.size()}, {"center", p.center.size()}});
      }
      j["pieces"] = pieces;
    }
    return j;
  }

  ordered_json axioms() {
    ordered_json j;
    j["axioms"] = ordered_json::array({spec_axioms("affine 1", s_.affine1()), spec_axioms("affine 2", s_.affine2()),
                                       compat_json("affine 1 + eps affine 2", s_.affine1(), s_.affine2())});
    return j;
  }

  ordered_json walgebra() {
    const auto& wp = s_.w();
    ordered_json j;
    j["N"] = s_.loop().format(wp.N, *s_.vars());
    ordered_json gens = ordered_json::array();
    ordered_json checks = ordered_json::array();
    for (std::size_t t = 0; t < wp.w.size(); ++t) {
      gens.push_back({{"name", name(wp.w[t].id)},
                      {"parity", parity_name(wp.w[t].parity)},
                      {"expression", fmt_poly(wp.expr[t])}});
      auto fails = check_gauge_invariance(wp.expr[t], wp, s_.affine1());
      std::string d;
      if (!fails.empty()) d = "{" + fails[0].n + " X .} = " + format(fails[0].residual, *s_.vars());
      checks.push_back(check_json(s_.vars()->name(wp.w[t].id) + " gauge invariant", fails.empty(), d));
    }
    j["generators"] = gens;
    j["checks"] = checks;
    return j;
  }

  ordered_json table(const BracketSpec& spec) const {
    ordered_json t = ordered_json::array();
    for (std::size_t a = 0; a < spec.size(); ++a)
      for (std::size_t b = a; b < spec.size(); ++b)
        t.push_back({{"a", name(spec.generators()[a].id)},
                     {"b", name(spec.generators()[b].id)},
                     {"value", fmt_chi(spec.entry(a, b))}});
    return t;
  }

  ordered_json brackets() {
    ordered_json j;
    j["first"] = table(s_.w1());
    j["second"] = table(s_.w2());
    j["axioms"] = ordered_json::array({spec_axioms("W 1", s_.w1()), spec_axioms("W 2", s_.w2()),
                                       compat_json("W 1 + eps W 2", s_.w1(), s_.w2())});
    return j;
  }

  ordered_json hierarchy() {
    const int depth = cfg_.depth;
    const auto& la = s_.loop();
    const auto& wp = s_.w();
    LoopElem C = s_.default_C();
    WHierarchy wh = make_w_hierarchy(la, wp, s_.w1(), s_.w2(), C, depth);
    ordered_json j;
    j["C"] = la.format(C, *s_.vars());
    j["depth"] = depth;
    ordered_json hs = ordered_json::array();
    ordered_json qs = ordered_json::array();
    for (int n = 0; n <= depth; ++n) {
      hs.push_back({{"n", n}, {"density", fmt_poly(wh.h[static_cast<std::size_t>(n)].density())}});
      qs.push_back({{"n", n}, {"density", fmt_poly(quadratic_part(la, wh.dressed, C, n).density())}});
    }
    j["hamiltonians"] = hs;
    j["quadratic_parts"] = qs;
    ordered_json flows = ordered_json::array();
    bool routes = true;
    std::string witness;
    for (int n = 0; n < depth; ++n)
      for (const auto& v : wp.w) {
        SPoly a = SPoly::var(v);
        SPoly f1 = wh.flow(n, a);
        SPoly f2 = wh.flow_second(n, a);
        if (f1 != f2 && routes) {
          routes = false;
          witness = fmt::format("t{} on {}: {} vs {}", n, s_.vars()->name(v.id), format(f1, *s_.vars()),
                                format(f2, *s_.vars()));
        }
        flows.push_back({{"n", n}, {"generator", name(v.id)}, {"value", fmt_poly(f1)}});
      }
    j["flows"] = flows;
    ordered_json checks = ordered_json::array();
    checks.push_back(check_json("first and second bracket flows agree", routes, witness));
    for (const auto& c : check_hierarchy(wh, depth)) checks.push_back(check_json(c.name, c.passed, c.detail));
    j["checks"] = checks;
    return j;
  }

 private:
  const PipelineConfig& cfg_;
  Session& s_;
  TextStyle style_;
};

// ---- rendering

void text_checks(std::ostream& o, const ordered_json& st) {
  if (st.contains("checks"))
    for (const auto& c : st["checks"]) {
      o << (c["passed"].get<bool>() ? "  ok    " : "  FAIL  ") << c["name"].get<std::string>();
      if (c.contains("detail")) o << ": " << c["detail"].get<std::string>();
      o << "\n";
    }
  if (st.contains("axioms"))
    for (const auto& s : st["axioms"])
      for (const auto& r : s["reports"]) {
        o << (r["passed"].get<bool>() ? "  ok    " : "  FAIL  ") << s["spec"].get<std::string>() << ": "
          << r["axiom"].get<std::string>() << " (" << r["checked"].get<std::size_t>() << " cases)";
        if (r.contains("failures")) {
          const auto& f = r["failures"][0];
          o << ", " << r["failure_count"].get<std::size_t>() << " failing, first {" << f["generators"].get<std::string>()
            << "}: " << f["residual"].get<std::string>();
        }
        o << "\n";
      }
}

void render_text(std::ostream& o, const std::string& stage, const ordered_json& st) {
  o << "[" << stage << "]\n";
  if (stage == "validate") {
    o << st["algebra"].get<std::string>() << ", dim " << st["dim"].get<std::size_t>() << ", i = " << st["i"].get<int>()
      << ", j = " << st["j"].get<int>() << "\n";
    if (st.contains("pieces"))
      for (const auto& p : st["pieces"])
        o << "  grade " << p["grade"].get<int>() << " (mod period): dim " << p["dim"].get<std::size_t>() << ", ker "
          << p["kernel"].get<std::size_t>() << ", im " << p["image"].get<std::size_t>() << ", centre "
          << p["center"].get<std::size_t>() << "\n";
  } else if (stage == "walgebra") {
    o << "N = " << st["N"].get<std::string>() << "\n";
    for (const auto& g : st["generators"])
      o << g["name"].get<std::string>() << " = " << g["expression"].get<std::string>() << "    ("
        << g["parity"].get<std::string>() << ")\n";
  } else if (stage == "brackets") {
    for (const char* which : {"first", "second"}) {
      o << which << " bracket:\n";
      for (const auto& e : st[which])
        o << "  {" << e["a"].get<std::string>() << " X " << e["b"].get<std::string>()
          << "} = " << e["value"].get<std::string>() << "\n";
    }
  } else if (stage == "hierarchy") {
    o << "C = " << st["C"].get<std::string>() << "\n";
    for (const auto& h : st["hamiltonians"])
      o << "rho" << h["n"].get<int>() << " = int " << h["density"].get<std::string>() << "\n";
    for (const auto& h : st["quadratic_parts"])
      o << "quadratic part of rho" << h["n"].get<int>() << " = int " << h["density"].get<std::string>() << "\n";
    for (const auto& f : st["flows"])
      o << "d" << f["generator"].get<std::string>() << "/dt" << f["n"].get<int>() << " = " << f["value"].get<std::string>()
        << "\n";
  }
  text_checks(o, st);
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

void render_latex(std::ostream& o, const std::string& stage, const ordered_json& st) {
  o << "% " << stage << "\n";
  if (stage == "walgebra") {
    o << "\\begin{align*}\n";
    const auto& g = st["generators"];
    for (std::size_t k = 0; k < g.size(); ++k)
      o << "  " << g[k]["name"].get<std::string>() << " &= " << g[k]["expression"].get<std::string>()
        << (k + 1 < g.size() ? " \\\\\n" : "\n");
    o << "\\end{align*}\n";
  } else if (stage == "brackets") {
    for (const char* which : {"first", "second"}) {
      const char* idx = std::string(which) == "first" ? "1" : "2";
      o << "\\begin{align*}\n";
      const auto& t = st[which];
      for (std::size_t k = 0; k < t.size(); ++k)
        o << "  \\{" << t[k]["a"].get<std::string>() << "{}_\\chi " << t[k]["b"].get<std::string>() << "\\}_" << idx
          << " &= " << t[k]["value"].get<std::string>() << (k + 1 < t.size() ? " \\\\\n" : "\n");
      o << "\\end{align*}\n";
    }
  } else if (stage == "hierarchy") {
    o << "\\begin{align*}\n";
    for (const auto& h : st["hamiltonians"])
      o << "  \\rho_" << h["n"].get<int>() << " &= \\int " << h["density"].get<std::string>() << " \\\\\n";
    const auto& f = st["flows"];
    for (std::size_t k = 0; k < f.size(); ++k)
      o << "  \\frac{d" << f[k]["generator"].get<std::string>() << "}{dt_" << f[k]["n"].get<int>()
        << "} &= " << f[k]["value"].get<std::string>() << (k + 1 < f.size() ? " \\\\\n" : "\n");
    o << "\\end{align*}\n";
  }
  std::ostringstream checks;
  text_checks(checks, st);
  std::istringstream lines(checks.str());
  for (std::string line; std::getline(lines, line);) o << "%" << latex_escape(line) << "\n";
}

void render(std::ostream& o, OutputFormat f, const std::string& stage, const ordered_json& st) {
  if (f == OutputFormat::Latex)
    render_latex(o, stage, st);
  else
    render_text(o, stage, st);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Stage parse_stage(std::string_view s) {
  for (int k = 0; k < 6; ++k)
    if (s == kStages[k]) return static_cast<Stage>(k);
  throw InvalidData("unknown stage '" + std::string(s) + "'");
}

OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "latex") return OutputFormat::Latex;
  throw InvalidData("unknown format '" + std::string(s) + "'");
}

const char* stage_name(Stage s) { return kStages[static_cast<int>(s)]; }

Session::Session(const LieSuperAlgebra& g, const ReductionInput& in, int zmin, int zmax)
    : g_(std::make_shared<const LieSuperAlgebra>(g)),
      rd_(std::make_shared<const ReductionData>(make_reduction(g_, in))),
      vars_(affine_variables(*g_)),
      la_(std::make_unique<LoopAlgebra>(rd_, zmin, zmax)),
      affine1_(affine_spec(*g_, 1, vars_)),
      affine2_(affine_spec(*g_, 2, vars_, rd_->s)) {}

const WPresentation& Session::w() const {
  if (!wp_) wp_ = std::make_unique<WPresentation>(canonical_form(*la_, vars_));
  return *wp_;
}

const BracketSpec& Session::w1() const {
  if (!w1_) w1_ = reduced_spec(affine1_, w());
  return *w1_;
}

const BracketSpec& Session::w2() const {
  if (!w2_) w2_ = reduced_spec(affine2_, w());
  return *w2_;
}

LoopElem Session::default_C() const {
  const GradedPiece& p = la_->piece(0);
  if (p.center.empty()) throw InvalidData("the centre of ker ad Lambda^2 is trivial in grade 0");
  LoopElem C;
  for (std::size_t k = 0; k < p.basis.size(); ++k)
    if (p.center[0][k] != 0) C.add(p.basis[k].first, p.basis[k].second, SPoly(p.center[0][k]));
  return C;
}

std::pair<LieSuperAlgebra, ReductionInput> load_algebra(const PipelineConfig& config) {
  if (config.builtin.empty() == config.input.empty()) throw InvalidData("give exactly one of --builtin and --input");
  if (!config.builtin.empty()) {
    Builtin b = builtin(config.builtin);
    return {std::move(b.algebra), std::move(b.reduction)};
  }
  AlgebraInput a = parse_algebra_json(read_file(config.input));
  return {std::move(a.algebra), std::move(a.reduction)};
}

int run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  const std::string source = config.builtin.empty() ? config.input : config.builtin;
  std::unique_ptr<Session> session;
  try {
    if (config.depth < 0) throw InvalidData("depth must be >= 0");
    const int window = config.window.value_or(config.depth + 2);
    if (window < config.depth + 2) throw InvalidData(fmt::format("window must be >= depth + 2 = {}", config.depth + 2));
    auto [g, in] = load_algebra(config);
    session = std::make_unique<Session>(g, in, -window, window);
  } catch (const ParseError& e) {
    err << source << ":" << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << source << ": " << e.what() << "\n";
    return kExitInput;
  }

  Runner runner(config, *session);
  ordered_json report;
  report["source"] = source;
  ordered_json& stages = report["stages"];
  stages = ordered_json::object();
  int status = kExitOk;
  auto emit = [&](Stage st, const ordered_json& j) {
    if (config.format == OutputFormat::Json) return;
    render(out, config.format, stage_name(st), j);
  };
  try {
    ordered_json v = runner.validate();
    bool valid = all_passed(v);
    if (config.stage == Stage::Validate || config.stage == Stage::All || !valid) {
      stages["validate"] = v;
      emit(Stage::Validate, v);
    }
    if (!valid) {
      status = kExitInvariant;
    } else {
      using Fn = ordered_json (Runner::*)();
      const std::pair<Stage, Fn> steps[] = {{Stage::Axioms, &Runner::axioms},
                                            {Stage::WAlgebra, &Runner::walgebra},
                                            {Stage::Brackets, &Runner::brackets},
                                            {Stage::Hierarchy, &Runner::hierarchy}};
      for (const auto& [st, fn] : steps) {
        if (config.stage != Stage::All && config.stage != st) continue;
        ordered_json j = (runner.*fn)();
        stages[stage_name(st)] = j;
        emit(st, j);
        if (!all_passed(j)) status = kExitInvariant;
      }
    }
  } catch (const WindowOverflow& e) {
    report["error"] = std::string("window overflow: ") + e.what();
    err << source << ": window overflow: " << e.what() << "\n";
    status = kExitOverflow;
  } catch (const InvalidData& e) {
    report["error"] = e.what();
    err << source << ": " << e.what() << "\n";
    status = kExitInvariant;
  }
  report["status"] = status;
  if (config.format == OutputFormat::Json) out << report.dump(2) << "\n";
  return status;
}

}  // namespace spva

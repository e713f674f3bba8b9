#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spva/axioms.hpp"
#include "spva/bracket.hpp"
#include "spva/builtin.hpp"
#include "spva/errors.hpp"
#include "spva/io.hpp"
#include "spva/pipeline.hpp"
#include "spva/text.hpp"

using namespace spva;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report(std::ostream& o, const std::string& label, const AxiomReport& r) {
  o << (r.ok() ? "ok    " : "FAIL  ") << label << " (" << r.checked << " cases)";
  if (!r.ok()) {
    const auto& f = r.failures.front();
    std::string gens;
    for (const auto& g : f.generators) gens += (gens.empty() ? "" : ", ") + g;
    o << ", " << r.failures.size() << " failing, first {" << gens << "}: " << f.residual;
  }
  o << "\n";
}

// Bracket tables in the text format; a second table adds the compatibility
// check of the pencil.
int axioms_command(const std::string& first, const std::string& second, std::ostream& out) {
  auto vars = std::make_shared<VariableSet>();
  BracketSpec a, b;
  std::string current = first;
  try {
    a = parse_bracket_spec(slurp(first), vars);
    if (!second.empty()) {
      current = second;
      b = parse_bracket_spec(slurp(second), vars);
    }
  } catch (const ParseError& e) {
    std::cerr << current << ":" << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << current << ": " << e.what() << "\n";
    return kExitInput;
  }
  bool ok = true;
  auto show = [&](const std::string& label, const AxiomReport& r) {
    print_report(out, label, r);
    ok = ok && r.ok();
  };
  show(first + ": skew-symmetry", check_skew_symmetry(a));
  show(first + ": Jacobi", check_jacobi(a));
  if (!second.empty()) {
    show(second + ": skew-symmetry", check_skew_symmetry(b));
    show(second + ": Jacobi", check_jacobi(b));
    auto c = check_compatibility(a, b);
    show("pencil: Jacobi eps^1", c.order1);
    ok = ok && c.ok();
  }
  return ok ? kExitOk : kExitInvariant;
}

int flow_command(const std::string& spec_path, const std::string& h, const std::string& var, std::ostream& out) {
  auto vars = std::make_shared<VariableSet>();
  try {
    BracketSpec spec = parse_bracket_spec(slurp(spec_path), vars);
    SPoly hp = parse_spoly(h, *vars);
    SPoly a = parse_spoly(var, *vars);
    out << "d(" << var << ")/dt = " << format(hamiltonian_flow(spec, hp, a), *vars) << "\n";
  } catch (const ParseError& e) {
    std::cerr << spec_path << ":" << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << spec_path << ": " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical W-algebras of Lie superalgebras and their integrable hierarchies"};
  app.require_subcommand(1);

  PipelineConfig cfg;
  std::string stage = "all", fmt = "text", out_path;
  int window = -1;
  auto* run = app.add_subcommand("run", "run the reduction pipeline");
  auto* b = run->add_option("--builtin", cfg.builtin, "builtin algebra: osp22, sl(m|n), osp(2n|2n), sl(n|n)/I");
  auto* in = run->add_option("--input", cfg.input, "algebra and reduction as JSON")->check(CLI::ExistingFile);
  b->excludes(in);
  run->add_option("--stage", stage, "validate, axioms, walgebra, brackets, hierarchy or all")
      ->check(CLI::IsMember({"validate", "axioms", "walgebra", "brackets", "hierarchy", "all"}));
  run->add_option("--depth", cfg.depth, "hierarchy depth")->check(CLI::NonNegativeNumber);
  run->add_option("--window", window, "z-window [-N, N], at least depth + 2");
  run->add_option("--format", fmt, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  run->add_option("--out", out_path, "write the report here instead of stdout");

  std::string spec1, spec2;
  auto* ax = app.add_subcommand("axioms", "check skew-symmetry and Jacobi of bracket tables");
  ax->add_option("spec", spec1, "bracket table")->required()->check(CLI::ExistingFile);
  ax->add_option("second", spec2, "second table; also checks compatibility")->check(CLI::ExistingFile);
  ax->add_option("--out", out_path, "write the report here instead of stdout");

  std::string fspec, ham, var;
  auto* fl = app.add_subcommand("flow", "evolution of a generator under a hamiltonian");
  fl->add_option("spec", fspec, "bracket table")->required()->check(CLI::ExistingFile);
  fl->add_option("--hamiltonian", ham, "density of the hamiltonian")->required();
  fl->add_option("--var", var, "generator")->required();

  std::string ex_name;
  auto* ex = app.add_subcommand("export", "write a builtin algebra and reduction as JSON");
  ex->add_option("--builtin", ex_name, "builtin algebra")->required();
  ex->add_option("--out", out_path, "write the document here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitInput;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  if (*ax) return axioms_command(spec1, spec2, out);
  if (*fl) return flow_command(fspec, ham, var, out);
  if (*ex) {
    try {
      Builtin bt = builtin(ex_name);
      out << algebra_to_json(bt.algebra, bt.reduction);
    } catch (const std::exception& e) {
      std::cerr << ex_name << ": " << e.what() << "\n";
      return kExitInput;
    }
    return kExitOk;
  }

  cfg.stage = parse_stage(stage);
  cfg.format = parse_format(fmt);
  if (window >= 0) cfg.window = window;
  return run_pipeline(cfg, out, std::cerr);
}

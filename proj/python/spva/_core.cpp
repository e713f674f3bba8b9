#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spva/axioms.hpp"
#include "spva/bracket.hpp"
#include "spva/builtin.hpp"
#include "spva/errors.hpp"
#include "spva/pipeline.hpp"
#include "spva/text.hpp"

namespace py = pybind11;
using namespace spva;

namespace {

py::tuple run(const std::string& builtin_name, const std::string& input, const std::string& stage, int depth,
              std::optional<int> window, const std::string& format) {
  PipelineConfig c;
  c.builtin = builtin_name;
  c.input = input;
  c.stage = parse_stage(stage);
  c.format = parse_format(format);
  c.depth = depth;
  c.window = window;
  std::ostringstream out, err;
  int code = run_pipeline(c, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

// Bracket tables given in the text format, with polynomials parsed in the
// table's variables.
struct Spec {
  VariableSetPtr vars = std::make_shared<VariableSet>();
  BracketSpec spec;
  explicit Spec(const std::string& text) : spec(parse_bracket_spec(text, vars)) {}
  SPoly poly(const std::string& s) const { return parse_spoly(s, *vars); }
};

std::string bracket(const std::string& table, const std::string& a, const std::string& b) {
  Spec s(table);
  return format(master_bracket(s.spec, s.poly(a), s.poly(b)), *s.vars);
}

std::string flow(const std::string& table, const std::string& density, const std::string& a) {
  Spec s(table);
  return format(hamiltonian_flow(s.spec, s.poly(density), s.poly(a)), *s.vars);
}

py::dict axioms(const std::string& table) {
  Spec s(table);
  py::dict d;
  d["skew_symmetry"] = check_skew_symmetry(s.spec).ok();
  d["jacobi"] = check_jacobi(s.spec).ok();
  return d;
}

py::dict w_algebra(const std::string& name) {
  Builtin b = builtin(name);
  Session s(b.algebra, b.reduction, -4, 4);
  const WPresentation& wp = s.w();
  py::dict d;
  for (std::size_t t = 0; t < wp.w.size(); ++t)
    d[py::str(s.vars()->name(wp.w[t].id))] = format(wp.expr[t], *s.vars());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Supersymmetric Poisson vertex algebras and their W-algebra hierarchies";
  py::register_exception<InvalidData>(m, "InvalidData", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<WindowOverflow>(m, "WindowOverflow", PyExc_RuntimeError);

  m.def("builtin_names", &builtin_names);
  m.def("run", &run, py::arg("builtin") = "", py::arg("input") = "", py::arg("stage") = "all", py::arg("depth") = 2,
        py::arg("window") = py::none(), py::arg("format") = "text",
        "Runs the pipeline; returns (exit code, report, diagnostics).");
  m.def("bracket", &bracket, py::arg("table"), py::arg("a"), py::arg("b"), "{a_X b} for a bracket table.");
  m.def("flow", &flow, py::arg("table"), py::arg("density"), py::arg("a"), "{int density_X a} at X = 0.");
  m.def("axioms", &axioms, py::arg("table"));
  m.def("w_algebra", &w_algebra, py::arg("builtin"), "Generators w_t in the affine variables.");
}

#include "spva/io.hpp"

#include <nlohmann/json.hpp>

#include "spva/errors.hpp"

namespace spva {

using json = nlohmann::ordered_json;

namespace {

std::pair<int, int> line_col(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema(const std::string& where, const std::string& msg) {
  throw InvalidData(where + ": " + msg);
}

Rational coeff(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      schema(where, "bad rational '" + v.get<std::string>() + "'");
    }
  }
  schema(where, "coefficient must be an integer or a string p/q");
}

std::size_t index(const LieSuperAlgebra& g, const json& v, const std::string& where) {
  if (!v.is_string()) schema(where, "basis element name expected");
  try {
    return g.index(v.get<std::string>());
  } catch (const std::exception&) {
    schema(where, "unknown basis element '" + v.get<std::string>() + "'");
  }
}

Vec vec(const LieSuperAlgebra& g, const json& v, const std::string& where) {
  if (!v.is_object()) schema(where, "vector must be an object {name: coeff}");
  Vec x(g.dim());
  for (const auto& [k, c] : v.items()) x[index(g, json(k), where)] += coeff(c, where + "." + k);
  return x;
}

std::vector<Vec> vecs(const LieSuperAlgebra& g, const json& v, const std::string& where) {
  if (!v.is_array()) schema(where, "list of vectors expected");
  std::vector<Vec> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(vec(g, v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

json to_json(const LieSuperAlgebra& g, const Vec& x) {
  json o = json::object();
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] != 0) o[g.basis(a).name] = to_string(x[a]);
  return o;
}

}  // namespace

AlgebraInput parse_algebra_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(e.what(), line, col);
  }
  if (!j.is_object()) schema("document", "object expected");
  for (const char* key : {"basis", "brackets", "form", "reduction"})
    if (!j.contains(key)) schema("document", std::string("missing '") + key + "'");

  std::vector<BasisElement> basis;
  const json& jb = j["basis"];
  if (!jb.is_array() || jb.empty()) schema("basis", "nonempty array expected");
  for (std::size_t k = 0; k < jb.size(); ++k) {
    const json& e = jb[k];
    std::string where = "basis[" + std::to_string(k) + "]";
    if (!e.is_object() || !e.contains("name") || !e.contains("parity") || !e.contains("degree"))
      schema(where, "needs name, parity and degree");
    BasisElement b;
    if (!e["name"].is_string()) schema(where, "name must be a string");
    b.name = e["name"].get<std::string>();
    const json& p = e["parity"];
    if (p == "even" || p == 0) {
      b.parity = Parity::Even;
    } else if (p == "odd" || p == 1) {
      b.parity = Parity::Odd;
    } else {
      schema(where, "parity must be even/odd or 0/1");
    }
    if (!e["degree"].is_number_integer()) schema(where, "degree must be an integer");
    b.degree = e["degree"].get<int>();
    basis.push_back(b);
  }

  AlgebraInput in;
  try {
    in.algebra = LieSuperAlgebra(j.value("name", std::string("input")), basis);
  } catch (const std::exception& e) {
    schema("basis", e.what());
  }
  LieSuperAlgebra& g = in.algebra;

  const json& br = j["brackets"];
  if (!br.is_array()) schema("brackets", "array expected");
  for (std::size_t k = 0; k < br.size(); ++k) {
    std::string where = "brackets[" + std::to_string(k) + "]";
    if (!br[k].is_array() || br[k].size() != 3) schema(where, "entry must be [a, b, {c: coeff}]");
    g.set_bracket(index(g, br[k][0], where), index(g, br[k][1], where), vec(g, br[k][2], where));
  }
  const json& fm = j["form"];
  if (!fm.is_array()) schema("form", "array expected");
  for (std::size_t k = 0; k < fm.size(); ++k) {
    std::string where = "form[" + std::to_string(k) + "]";
    if (!fm[k].is_array() || fm[k].size() != 3) schema(where, "entry must be [a, b, coeff]");
    g.set_form(index(g, fm[k][0], where), index(g, fm[k][1], where), coeff(fm[k][2], where));
  }

  const json& r = j["reduction"];
  if (!r.is_object()) schema("reduction", "object expected");
  for (const char* key : {"n", "m", "f", "s"})
    if (!r.contains(key)) schema("reduction", std::string("missing '") + key + "'");
  in.reduction.n = vecs(g, r["n"], "reduction.n");
  in.reduction.m = vecs(g, r["m"], "reduction.m");
  in.reduction.f = vec(g, r["f"], "reduction.f");
  in.reduction.s = vec(g, r["s"], "reduction.s");
  if (r.contains("V")) in.reduction.V = vecs(g, r["V"], "reduction.V");
  if (r.contains("bminus")) {
    if (!r["bminus"].is_array()) schema("reduction.bminus", "array of names expected");
    std::vector<std::size_t> bm;
    for (const auto& v : r["bminus"]) bm.push_back(index(g, v, "reduction.bminus"));
    in.reduction.bminus = bm;
  }
  return in;
}

std::string algebra_to_json(const LieSuperAlgebra& g, const ReductionInput& r) {
  json j;
  j["name"] = g.name();
  j["basis"] = json::array();
  for (const auto& b : g.basis())
    j["basis"].push_back({{"name", b.name}, {"parity", b.parity == Parity::Odd ? "odd" : "even"}, {"degree", b.degree}});
  j["brackets"] = json::array();
  j["form"] = json::array();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b) {
      if (!g.bracket(a, b).empty()) j["brackets"].push_back({g.basis(a).name, g.basis(b).name, to_json(g, g.dense(g.bracket(a, b)))});
      if (g.form(a, b) != 0) j["form"].push_back({g.basis(a).name, g.basis(b).name, to_string(g.form(a, b))});
    }
  json red;
  red["n"] = json::array();
  for (const auto& v : r.n) red["n"].push_back(to_json(g, v));
  red["m"] = json::array();
  for (const auto& v : r.m) red["m"].push_back(to_json(g, v));
  red["f"] = to_json(g, r.f);
  red["s"] = to_json(g, r.s);
  if (r.V) {
    red["V"] = json::array();
    for (const auto& v : *r.V) red["V"].push_back(to_json(g, v));
  }
  if (r.bminus) {
    red["bminus"] = json::array();
    for (auto a : *r.bminus) red["bminus"].push_back(g.basis(a).name);
  }
  j["reduction"] = red;
  return j.dump(2) + "\n";
}

}  // namespace spva

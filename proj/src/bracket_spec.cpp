#include "spva/bracket_spec.hpp"

#include <sstream>

#include "spva/errors.hpp"
#include "spva/text.hpp"

namespace spva {

BracketSpec::BracketSpec(VariableSetPtr vars, std::vector<Variable> generators, const std::map<Key, ChiPoly>& entries)
    : vars_(std::move(vars)), gens_(std::move(generators)) {
  const std::size_t n = gens_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(gens_[i].id, i).second) throw InvalidData("generator listed twice");
  }
  for (const auto& [k, p] : entries) {
    auto [i, j] = k;
    if (i >= n || j >= n) throw InvalidData("bracket entry refers to an unknown generator");
    if (p.is_zero()) continue;
    for (auto v : [&] {
           std::vector<std::uint32_t> ids;
           for (const auto& c : p.coeffs())
             for (auto id : c.variables()) ids.push_back(id);
           return ids;
         }()) {
      if (!index_.count(v)) throw InvalidData("bracket entry mentions a variable that is not a generator");
    }
    for (int m = 0; m <= p.degree(); ++m) {
      const SPoly& c = p.coeff(m);
      if (c.is_zero()) continue;
      auto want = gens_[i].parity + gens_[j].parity + parity_of(m + 1);
      std::optional<Parity> got;
      try {
        got = c.parity();
      } catch (const std::domain_error&) {
        throw InvalidData("bracket entry coefficient is not homogeneous");
      }
      if (got != want) {
        std::string name = vars_ ? "{" + vars_->name(gens_[i].id) + ", " + vars_->name(gens_[j].id) + "}" : "entry";
        throw InvalidData("coefficient of X^" + std::to_string(m) + " in " + name + " has the wrong parity");
      }
    }
    Key key = i <= j ? k : Key{j, i};
    if (stored_.count(key)) throw InvalidData("bracket entry given twice (directly and through skew-symmetry)");
    if (i <= j) {
      stored_.emplace(key, p);
    } else {
      ChiPoly s = skew_substitute(p);
      if (bit(gens_[i].parity) & bit(gens_[j].parity)) s = -s;
      stored_.emplace(key, s);
    }
  }
  full_.assign(n * n, ChiPoly());
  for (const auto& [k, p] : stored_) {
    auto [i, j] = k;
    full_[i * n + j] = p;
    if (i != j) {
      ChiPoly s = skew_substitute(p);
      if (bit(gens_[i].parity) & bit(gens_[j].parity)) s = -s;
      full_[j * n + i] = s;
    }
  }
}

std::optional<std::size_t> BracketSpec::index_of(std::uint32_t var_id) const {
  auto it = index_.find(var_id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BracketSpec BracketSpec::operator+(const BracketSpec& o) const {
  if (gens_ != o.gens_) throw std::invalid_argument("bracket specs have different generators");
  std::map<Key, ChiPoly> e = stored_;
  for (const auto& [k, p] : o.stored_) e[k] += p;
  return BracketSpec(vars_, gens_, e);
}

BracketSpec BracketSpec::scaled(const Rational& q) const {
  std::map<Key, ChiPoly> e;
  for (const auto& [k, p] : stored_) e[k] = p * q;
  return BracketSpec(vars_, gens_, e);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

BracketSpec parse_bracket_spec(std::string_view text, const VariableSetPtr& vars) {
  std::vector<Variable> gens;
  std::map<BracketSpec::Key, ChiPoly> entries;
  std::map<std::uint32_t, std::size_t> pos;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (s.rfind("even ", 0) == 0 || s.rfind("odd ", 0) == 0) {
      Parity p = s[0] == 'o' ? Parity::Odd : Parity::Even;
      std::istringstream names(s.substr(s.find(' ')));
      std::string name;
      while (names >> name) {
        if (name == "X") throw ParseError("X is reserved for chi", line, 1);
        Variable v;
        try {
          v = vars->add(name, p);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line, 1);
        }
        pos.emplace(v.id, gens.size());
        gens.push_back(v);
      }
      continue;
    }
    if (s[0] != '{') throw ParseError("expected a declaration or a bracket entry", line, 1);
    auto close = s.find('}');
    auto comma = s.find(',');
    auto eq = s.find('=', close == std::string::npos ? 0 : close);
    if (close == std::string::npos || comma == std::string::npos || comma > close || eq == std::string::npos)
      throw ParseError("expected '{a, b} = ...'", line, 1);
    auto lookup = [&](const std::string& name, std::size_t col) {
      auto v = vars->find(name);
      if (!v || !pos.count(v->id)) throw ParseError("unknown generator '" + name + "'", line, static_cast<int>(col) + 1);
      return pos.at(v->id);
    };
    std::size_t i = lookup(trim(s.substr(1, comma - 1)), 1);
    std::size_t j = lookup(trim(s.substr(comma + 1, close - comma - 1)), comma + 1);
    ChiPoly p = parse_chipoly(s.substr(eq + 1), *vars, line);
    if (entries.count({i, j})) throw ParseError("bracket entry given twice", line, 1);
    entries.emplace(BracketSpec::Key{i, j}, p);
  }
  try {
    return BracketSpec(vars, gens, entries);
  } catch (const InvalidData& e) {
    throw ParseError(e.what(), line, 1);
  }
}

std::string format_bracket_spec(const BracketSpec& spec) {
  std::ostringstream out;
  const auto& vars = *spec.vars();
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::string names;
    for (const auto& g : spec.generators())
      if (g.parity == p) names += " " + vars.name(g.id);
    if (!names.empty()) out << (p == Parity::Even ? "even" : "odd") << names << "\n";
  }
  for (const auto& [k, p] : spec.stored()) {
    if (p.is_zero()) continue;
    out << "{" << vars.name(spec.generators()[k.first].id) << ", " << vars.name(spec.generators()[k.second].id)
        << "} = " << format(p, vars) << "\n";
  }
  return out.str();
}

}  // namespace spva

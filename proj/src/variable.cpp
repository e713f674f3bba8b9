#include "spva/variable.hpp"

#include <stdexcept>

namespace spva {

Variable VariableSet::add(const std::string& name, Parity parity) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  if (index_.count(name)) throw std::invalid_argument("duplicate variable '" + name + "'");
  if (names_.size() >= (1u << 22)) throw std::length_error("too many variables");
  auto id = static_cast<std::uint32_t>(names_.size());
  names_.push_back(name);
  parities_.push_back(parity);
  latex_.push_back(name);
  index_.emplace(name, id);
  return {id, parity};
}

Variable VariableSet::at(std::uint32_t id) const { return {id, parities_.at(id)}; }

std::optional<Variable> VariableSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return at(it->second);
}

Variable VariableSet::get(const std::string& name) const {
  auto v = find(name);
  if (!v) throw std::invalid_argument("unknown variable '" + name + "'");
  return *v;
}

const std::string& VariableSet::latex(std::uint32_t id) const { return latex_.at(id); }

void VariableSet::set_latex(std::uint32_t id, std::string tex) { latex_.at(id) = std::move(tex); }

}  // namespace spva

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spva/parity.hpp"

namespace spva {

struct Variable {
  std::uint32_t id = 0;
  Parity parity = Parity::Even;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Names and parities of the differential generators in use.  Ids are dense
// and their order is the variable order used by monomials.
class VariableSet {
 public:
  Variable add(const std::string& name, Parity parity);
  Variable at(std::uint32_t id) const;
  std::optional<Variable> find(const std::string& name) const;
  Variable get(const std::string& name) const;  // throws if unknown

  const std::string& name(std::uint32_t id) const { return names_.at(id); }
  // Name used in LaTeX output; defaults to the plain name.
  const std::string& latex(std::uint32_t id) const;
  void set_latex(std::uint32_t id, std::string tex);
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
  std::vector<std::string> latex_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

using VariableSetPtr = std::shared_ptr<VariableSet>;

}  // namespace spva

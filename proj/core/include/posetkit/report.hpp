#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "posetkit/poset.hpp"

namespace posetkit {

using Value = std::variant<Element, Subset>;

struct Binding {
  std::string var;
  Value value;
};

/// Outcome of deciding one named property on one poset.
///
/// When `holds` is false the witness binds the quantified variables of the
/// first failing instance (canonical element order). Existential searches
/// bind the found instance when `holds` is true.
struct PropertyReport {
  std::string property;
  bool holds = true;
  std::vector<Binding> witness;
  /// The hypothesis of an implication was false, so it holds trivially.
  bool vacuous = false;
  /// False when instances were sampled rather than enumerated.
  bool exhaustive = true;
  std::size_t samples = 0;
  std::string note;

  static PropertyReport pass(std::string property) {
    PropertyReport r;
    r.property = std::move(property);
    return r;
  }
  static PropertyReport fail(std::string property, std::vector<Binding> witness) {
    PropertyReport r;
    r.property = std::move(property);
    r.holds = false;
    r.witness = std::move(witness);
    return r;
  }

  const Binding* find(std::string_view var) const;
  /// Throws InvalidArgument if `var` is not bound to an element.
  Element element(std::string_view var) const;
  /// Throws InvalidArgument if `var` is not bound to a subset.
  const Subset& subset(std::string_view var) const;
};

/// "x=c y=f' z=a lhs={0,a} rhs={0}"
std::string describe_witness(const Poset& p, const PropertyReport& r);

/// Conjunction of reports under one name; the witness is the first failure's.
PropertyReport all_of(std::string property, const std::vector<PropertyReport>& parts);

}  // namespace posetkit

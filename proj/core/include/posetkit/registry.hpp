#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "posetkit/completion.hpp"
#include "posetkit/poset.hpp"
#include "posetkit/report.hpp"
#include "posetkit/residuation.hpp"

// Named properties and theorem suites, addressable from the CLI and from
// search expressions.

namespace posetkit {

struct EvalContext {
  ConditionOptions conditions;
  HullCheckOptions hull;
  /// Seed for the random subset pairs of the Galois lemma.
  std::uint64_t seed = 0;
  std::size_t galois_pairs = 200;

  /// Exhaustive up to `exhaustive_cap` elements for every exponential
  /// check, `samples` seeded instances above it.
  static EvalContext with_cap(std::size_t exhaustive_cap, std::size_t samples, std::uint64_t seed);
};

/// Canonical property names in registry order ("all" in the CLI).
const std::vector<std::string>& property_names();
/// Maps an alias to its canonical name; throws UnknownProperty.
std::string resolve_property(std::string_view name);
PropertyReport evaluate_property(const BoundedPoset& bp, std::string_view name, const EvalContext& ctx = {});

/// Theorem suites; a failing report is a counterexample. "all" is a suite
/// that runs every other one.
const std::vector<std::string>& suite_names();
/// Throws PredicateUnknown.
PropertyReport run_suite(const BoundedPoset& bp, std::string_view suite, const EvalContext& ctx = {});

/// Boolean combination of property names: `!` / `¬`, `&` / `∧`, `|` / `∨`,
/// parentheses. Names resolve through the property registry.
class Predicate {
 public:
  /// Throws SyntaxError or PredicateUnknown.
  static Predicate parse(std::string_view text);

  /// Distinct property names in order of first appearance.
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  /// One report per atom, in atoms() order, and the combined value.
  bool evaluate(const BoundedPoset& bp, const EvalContext& ctx, std::vector<PropertyReport>* reports = nullptr) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::string text_;
  std::vector<std::string> atoms_;
  std::shared_ptr<const Node> root_;
};

}  // namespace posetkit

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "posetkit/poset.hpp"
#include "posetkit/report.hpp"

// Set-valued binary operators built from the complement operator ⁺:
//
//   a ∘ b := Max L(a,b)
//   a → b := Min U(a⁺, b)
//   a ⊙ b := Max L(b, U(a, b⁺))
//   a ↪ b := Min U(a⁺, L(a,b))
//
// Element-style comparisons between operator results use set_le, with
// single elements read as singletons.

namespace posetkit {

enum class Op { Circ, Imp, Odot, Hook };

std::string_view to_string(Op op);
/// "circ", "imp", "odot", "hook"; throws InvalidArgument otherwise.
Op parse_op(std::string_view name);

Subset circ(const BoundedPoset& bp, Element a, Element b);
Subset imp(const BoundedPoset& bp, Element a, Element b);
Subset odot(const BoundedPoset& bp, Element a, Element b);
Subset hook(const BoundedPoset& bp, Element a, Element b);
/// Min U(a⁺, Max L(a,b)); equal to hook().
Subset hook_via_max(const BoundedPoset& bp, Element a, Element b);
Subset apply(const BoundedPoset& bp, Op op, Element a, Element b);

/// Precomputed n×n operator values.
class OpTable {
 public:
  OpTable(const BoundedPoset& bp, Op op);
  const Bits& at(Element a, Element b) const { return values_[a * n_ + b]; }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<Bits> values_;
};

/// Monotone from the left: x <= y ⟹ x*z <=_1 y*z.
PropertyReport monotone_left(const BoundedPoset& bp, Op op);
/// Monotone from the right: x <= y ⟹ z*x <=_2 z*y.
PropertyReport monotone_right(const BoundedPoset& bp, Op op);
/// Weakly antitone from the left: 1*y <= x*y.
PropertyReport weakly_antitone_left(const BoundedPoset& bp, Op op);
/// Weakly monotone from the right: x*y <= x*1.
PropertyReport weakly_monotone_right(const BoundedPoset& bp, Op op);

/// circ/odot monotone-left, imp/hook monotone-right, hook weakly
/// antitone-left, odot weakly monotone-right.
std::vector<PropertyReport> monotonicity_report(const BoundedPoset& bp);

/// x∘y <= z ⟹ x <= y→z ("forward") and the converse ("backward").
struct AdjointnessReport {
  PropertyReport forward;
  PropertyReport backward;
  PropertyReport both;
};
AdjointnessReport adjointness_report(const BoundedPoset& bp);

/// The same two directions for the pair (⊙, ↪).
AdjointnessReport odot_hook_adjointness(const BoundedPoset& bp);

struct ConditionOptions {
  /// Exhaustive evaluation of conditions 5 and 6 is allowed up to this size.
  std::size_t size_cap = 12;
  /// When set, sizes above the cap are checked on this many seeded random
  /// (subset, subset, element) instances instead of throwing.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
};

/// Conditions on the poset:
///   1: U(x⁺, L(x,y)) ⊆ U(y)
///   2: L(x, U(x⁺,y)) ⊆ L(y)
///   3: U(x⁺, L(x, U(x⁺,y))) ⊆ U(y)
///   4: L(x, U(x⁺, L(x,y))) ⊆ L(y)
///   5: U(L(A,y),C) = UL(A, U(y,C))   for non-empty A, C with C <= A
///   6: L(U(A,B),z) = LU(A, L(B,z))   for non-empty A, B with A <= z
/// Conditions 5 and 6 throw SizeCapExceeded above the cap unless sampling.
PropertyReport condition(const BoundedPoset& bp, int k, const ConditionOptions& options = {});

/// Each implication theorem as one report: hypothesis false ⟹ vacuous,
/// otherwise the conclusion is evaluated over all triples.
std::vector<PropertyReport> theorem_implications(const BoundedPoset& bp,
                                                 const ConditionOptions& options = {});

}  // namespace posetkit

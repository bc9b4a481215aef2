#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetkit/poset.hpp"

namespace posetkit {

/// a ⊥ b: sup{a,b} = 1 and inf{a,b} = 0.
bool perp(const BoundedPoset& bp, Element a, Element b);

/// a⁺, the set of all complements of a.
Subset plus(const BoundedPoset& bp, Element a);
/// A⁺ = {x : x ⊥ y for all y in A}; ∅⁺ = P.
Subset plus(const BoundedPoset& bp, const Subset& a);
/// (A⁺)⁺
Subset bi_plus(const BoundedPoset& bp, const Subset& a);
bool is_closed(const BoundedPoset& bp, const Subset& a);

/// Least / greatest element of a⁺ if one exists. Throws EmptyComplementSet
/// when a has no complement at all.
std::optional<Element> plus_least(const BoundedPoset& bp, Element a);
std::optional<Element> plus_greatest(const BoundedPoset& bp, Element a);

namespace raw {
Bits plus(const BoundedPoset& bp, const Bits& a);
}  // namespace raw

/// The complete ortholattice of ⁺-closed subsets ordered by inclusion.
class ClLattice {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  const Subset& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Subset>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> find(const Subset& s) const;
  /// Throws InvalidArgument when `s` is not closed.
  std::size_t index_of(const Subset& s) const;

  bool leq(std::size_t i, std::size_t j) const { return order_[i].test(j); }
  std::size_t ortho(std::size_t i) const { return ortho_[i]; }
  /// Intersection.
  std::size_t meet(std::size_t i, std::size_t j) const;
  /// ((X ∪ Y)⁺)⁺
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return elements_.size() - 1; }

  /// The lattice as a poset; element names are subset labels such as "{a,c}".
  Poset as_poset() const;

  /// Description of the first violated ortholattice axiom, if any.
  std::optional<std::string> ortholattice_violation() const;

  const BoundedPoset& base() const noexcept { return base_; }

  friend ClLattice closed_sets(const BoundedPoset& bp);

 private:
  ClLattice(BoundedPoset bp, std::vector<Subset> elements);

  BoundedPoset base_;
  std::vector<Subset> elements_;
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
  std::vector<Bits> order_;
  std::vector<std::size_t> ortho_;
};

/// Enumerates Cl(P) as all intersections of the element complement sets
/// together with P. Throws InvariantViolation if the ortholattice axioms fail.
ClLattice closed_sets(const BoundedPoset& bp);

}  // namespace posetkit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetkit/poset.hpp"
#include "posetkit/report.hpp"

namespace posetkit {

/// Dedekind-MacNeille completion: the cuts L(A), A ⊆ P, ordered by inclusion.
class DMLattice {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  const Subset& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Subset>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> find(const Subset& s) const;
  /// Throws InvalidArgument when `s` is not a cut.
  std::size_t index_of(const Subset& s) const;
  /// Index of L(x).
  std::size_t principal(Element x) const { return principal_.at(x); }

  bool leq(std::size_t i, std::size_t j) const { return order_[i].test(j); }
  /// Intersection.
  std::size_t meet(std::size_t i, std::size_t j) const;
  /// LU of the union.
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return elements_.size() - 1; }

  Poset as_poset() const;
  /// Description of the first violated lattice law, if any.
  std::optional<std::string> lattice_violation() const;

  const Poset& base() const noexcept { return base_; }

  friend DMLattice dm_completion(const Poset& p);

 private:
  DMLattice(Poset p, std::vector<Subset> elements);

  Poset base_;
  std::vector<Subset> elements_;
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
  std::vector<Bits> order_;
  std::vector<std::size_t> principal_;
};

/// Enumerates cuts as all intersections of principal down sets, plus P.
/// Throws InvariantViolation if the result is not a lattice.
DMLattice dm_completion(const Poset& p);

/// x <= y ⟺ L(x) ⊆ L(y), and for every subset A: a = sup A ⟺ LU(A) = L(a),
/// a = inf A ⟺ L(A) = L(a). Subsets are enumerated fully up to 12 elements,
/// pairs only above that.
PropertyReport embedding_check(const Poset& p);

/// Cuts i, j are orthogonal in the completion: join is P and meet is L(0).
bool dm_orthogonal(const DMLattice& dm, std::size_t i, std::size_t j);
/// The order-theoretic side: sup(A ∪ B) = 1 in P and L(x,y) = {0} for all
/// x in A, y in B.
bool dm_condition_ii(const BoundedPoset& bp, const Subset& a, const Subset& b);
/// dm_orthogonal ⟺ dm_condition_ii for every pair of cuts; witness A, B.
PropertyReport dm_orthogonality_check(const BoundedPoset& bp);
/// a ⊥ b ⟺ L(a) ⊥ L(b) in the completion; witness a, b.
PropertyReport dm_element_orthogonality(const BoundedPoset& bp);

/// A↓ ∩ A↑
Subset convex_hull(const Poset& p, const Subset& a);
/// {x : y <= x <= z for some y, z in A}
Subset convex_hull_between(const Poset& p, const Subset& a);
bool is_convex(const Poset& p, const Subset& a);

/// Non-empty convex subsets ordered by ⊑, bounded by {0} and {1}.
class ConvPoset {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  const Subset& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Subset>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> find(const Subset& s) const;
  /// Throws InvalidArgument when `s` is empty or not convex.
  std::size_t index_of(const Subset& s) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  std::optional<std::size_t> sup(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> inf(std::size_t i, std::size_t j) const;
  /// sup exists and is {1}, inf exists and is {0}.
  bool orthogonal(std::size_t i, std::size_t j) const;

  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  Poset as_poset() const;
  const BoundedPoset& base() const noexcept { return base_; }

  friend ConvPoset conv_star(const BoundedPoset& bp, std::size_t cap);

 private:
  ConvPoset(BoundedPoset bp, std::vector<Subset> elements);

  BoundedPoset base_;
  std::vector<Subset> elements_;
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Throws SizeCapExceeded when |P| > cap, InvariantViolation if ⊑ fails to be
/// a bounded partial order.
ConvPoset conv_star(const BoundedPoset& bp, std::size_t cap = 14);

struct SubsetOrthogonality {
  bool holds = true;
  /// One of the sets was empty.
  bool vacuous = false;
};
/// x ⊥ y for all x in A and y in B.
SubsetOrthogonality subsets_orthogonal(const BoundedPoset& bp, const Subset& a, const Subset& b);

struct HullCheckOptions {
  /// All pairs of non-empty subsets are checked up to this size.
  std::size_t size_cap = 8;
  /// Above the cap: number of seeded random pairs; unset means throw.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
};
/// A ⊥ B ⟺ hull(A) ⊥ hull(B) in Conv★ for non-empty A, B; witness A, B.
PropertyReport hull_orthogonality_check(const BoundedPoset& bp, const HullCheckOptions& options = {});

}  // namespace posetkit

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetkit/bits.hpp"

namespace posetkit {

/// Internal element index. Names exist only at the I/O boundary.
using Element = std::size_t;

/// A set of elements of one specific poset.
class Subset {
 public:
  Subset() = default;
  Subset(std::uint64_t owner, Bits members) : owner_(owner), members_(std::move(members)) {}

  std::uint64_t owner() const noexcept { return owner_; }
  const Bits& members() const noexcept { return members_; }
  /// Number of slots (the size of the owning poset).
  std::size_t universe() const noexcept { return members_.size(); }
  std::size_t size() const noexcept { return members_.count(); }
  bool empty() const noexcept { return members_.none(); }
  bool contains(Element e) const noexcept { return members_.test(e); }
  std::vector<Element> elements() const { return members_.indices(); }

  Subset& insert(Element e) {
    members_.set(e);
    return *this;
  }
  Subset& erase(Element e) {
    members_.reset(e);
    return *this;
  }

  bool is_subset_of(const Subset& other) const;

  Subset& operator&=(const Subset& o);
  Subset& operator|=(const Subset& o);
  /// Set difference.
  Subset& operator-=(const Subset& o);

  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  void same_owner(const Subset& o) const;

  std::uint64_t owner_ = 0;
  Bits members_;
};

/// Finite poset with a dense order relation. Immutable after construction.
class Poset {
 public:
  using NamedCover = std::pair<std::string, std::string>;

  /// Builds the reflexive-transitive closure of `covers` (pairs lo < hi).
  /// Throws DuplicateName, UnknownName or CycleDetected.
  static Poset from_covers(std::vector<std::string> names, std::span<const NamedCover> covers);
  static Poset from_covers(std::vector<std::string> names, std::initializer_list<NamedCover> covers) {
    return from_covers(std::move(names), std::span<const NamedCover>(covers.begin(), covers.size()));
  }

  /// Combinator path: `up[x]` lists every y with x <= y. The three order
  /// axioms are re-checked; violations throw InvalidArgument.
  static Poset from_relation(std::vector<std::string> names, std::vector<Bits> up);

  std::uint64_t id() const noexcept { return id_; }
  std::size_t size() const noexcept { return names_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element e) const { return names_.at(e); }
  std::optional<Element> find(std::string_view name) const;
  /// Throws UnknownName.
  Element index(std::string_view name) const;

  bool leq(Element x, Element y) const noexcept { return up_[x].test(y); }
  bool lt(Element x, Element y) const noexcept { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const noexcept { return leq(x, y) || leq(y, x); }

  /// Principal filter {y : x <= y}.
  const Bits& up_row(Element x) const noexcept { return up_[x]; }
  /// Principal ideal {y : y <= x}.
  const Bits& down_row(Element x) const noexcept { return down_[x]; }

  /// Transitive reduction, sorted by (lo, hi).
  const std::vector<std::pair<Element, Element>>& covers() const noexcept { return covers_; }

  /// Length of the longest chain ending at each element (minimal elements are 0).
  std::vector<std::size_t> heights() const;

  Subset empty_set() const { return Subset(id_, Bits(size())); }
  Subset full_set() const { return Subset(id_, Bits(size(), true)); }
  Subset singleton(Element e) const;
  Subset subset(std::initializer_list<Element> elems) const;
  Subset subset(std::span<const Element> elems) const;
  Subset subset(Bits members) const;
  /// Throws UnknownName.
  Subset subset_named(std::span<const std::string> names) const;
  Subset subset_named(std::initializer_list<std::string_view> names) const;

  /// Throws ForeignSubset unless `s` belongs to this poset.
  void require_owned(const Subset& s) const;

  /// "{a,c}" in element order.
  std::string label(const Subset& s) const;
  std::string label(const Bits& s) const;

 private:
  Poset(std::vector<std::string> names, std::vector<Bits> up);

  std::uint64_t id_ = 0;
  std::vector<std::string> names_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::pair<Element, Element>> covers_;
};

/// Poset with distinct least and greatest elements.
class BoundedPoset {
 public:
  const Poset& poset() const noexcept { return base_; }
  operator const Poset&() const noexcept { return base_; }

  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  std::size_t size() const noexcept { return base_.size(); }
  const std::string& name(Element e) const { return base_.name(e); }
  Element index(std::string_view name) const { return base_.index(name); }
  bool leq(Element x, Element y) const noexcept { return base_.leq(x, y); }

  /// {x : x is a complement of a}.
  const Bits& complement_row(Element a) const noexcept { return perp_[a]; }

  friend BoundedPoset as_bounded(Poset p);

 private:
  BoundedPoset(Poset p, Element bottom, Element top);

  Poset base_;
  Element bottom_;
  Element top_;
  std::vector<Bits> perp_;
};

/// Throws NoBottom, NoTop or Trivial.
BoundedPoset as_bounded(Poset p);

/// Glues `p` and `q` at their bounds; every other element of p is
/// incomparable to every other element of q. Clashing names from `q` are
/// suffixed with "_r" until unique.
BoundedPoset horizontal_sum(const BoundedPoset& p, const BoundedPoset& q);

/// Chain 0 < 1 < ... < n-1 with the given names (defaults "0".."n-1").
Poset chain(std::size_t n);
Poset chain(std::vector<std::string> names);

/// Adds a new least element "0" and greatest element "1" around `middle`.
BoundedPoset add_bounds(const Poset& middle, std::string bottom_name = "0",
                        std::string top_name = "1");

/// Byte string that is equal for two posets iff they are isomorphic.
std::string canonical_form(const Poset& p);

/// A permutation `perm` such that element i of `p` is mapped to position
/// perm[i] in the canonical labelling.
std::vector<Element> canonical_labelling(const Poset& p);

}  // namespace posetkit

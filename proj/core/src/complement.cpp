#include "posetkit/complement.hpp"

#include <algorithm>
#include <set>

#include "posetkit/cones.hpp"
#include "posetkit/errors.hpp"

namespace posetkit {

bool perp(const BoundedPoset& bp, Element a, Element b) {
  return bp.complement_row(a).test(b);
}

namespace raw {

Bits plus(const BoundedPoset& bp, const Bits& a) {
  Bits r(bp.size(), true);
  a.for_each([&](Element x) { r &= bp.complement_row(x); });
  return r;
}

}  // namespace raw

Subset plus(const BoundedPoset& bp, Element a) {
  return bp.poset().subset(bp.complement_row(a));
}

Subset plus(const BoundedPoset& bp, const Subset& a) {
  bp.poset().require_owned(a);
  return bp.poset().subset(raw::plus(bp, a.members()));
}

Subset bi_plus(const BoundedPoset& bp, const Subset& a) {
  return plus(bp, plus(bp, a));
}

bool is_closed(const BoundedPoset& bp, const Subset& a) {
  return bi_plus(bp, a) == a;
}

std::optional<Element> plus_least(const BoundedPoset& bp, Element a) {
  const Bits& row = bp.complement_row(a);
  if (row.none()) {
    throw Error(ErrorKind::EmptyComplementSet, "element '" + bp.name(a) + "' has no complement");
  }
  return raw::least_of(bp.poset(), row);
}

std::optional<Element> plus_greatest(const BoundedPoset& bp, Element a) {
  const Bits& row = bp.complement_row(a);
  if (row.none()) {
    throw Error(ErrorKind::EmptyComplementSet, "element '" + bp.name(a) + "' has no complement");
  }
  return raw::greatest_of(bp.poset(), row);
}

// --- ClLattice --------------------------------------------------------------

ClLattice::ClLattice(BoundedPoset bp, std::vector<Subset> elements)
    : base_(std::move(bp)), elements_(std::move(elements)) {
  const std::size_t m = elements_.size();
  for (std::size_t i = 0; i < m; ++i) index_.emplace(elements_[i].members(), i);
  order_.assign(m, Bits(m));
  ortho_.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (elements_[i].members().is_subset_of(elements_[j].members())) order_[i].set(j);
    }
    auto it = index_.find(raw::plus(base_, elements_[i].members()));
    if (it == index_.end()) {
      throw Error(ErrorKind::InvariantViolation, "orthocomplement of a closed set is not closed");
    }
    ortho_[i] = it->second;
  }
}

std::optional<std::size_t> ClLattice::find(const Subset& s) const {
  base_.poset().require_owned(s);
  auto it = index_.find(s.members());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ClLattice::index_of(const Subset& s) const {
  if (auto i = find(s)) return *i;
  throw Error(ErrorKind::InvalidArgument, base_.poset().label(s) + " is not a closed subset");
}

std::size_t ClLattice::meet(std::size_t i, std::size_t j) const {
  auto it = index_.find(elements_[i].members() & elements_[j].members());
  if (it == index_.end()) throw Error(ErrorKind::InvariantViolation, "closed sets not closed under intersection");
  return it->second;
}

std::size_t ClLattice::join(std::size_t i, std::size_t j) const {
  Bits u = elements_[i].members() | elements_[j].members();
  auto it = index_.find(raw::plus(base_, raw::plus(base_, u)));
  if (it == index_.end()) throw Error(ErrorKind::InvariantViolation, "closure of a union is not closed");
  return it->second;
}

Poset ClLattice::as_poset() const {
  std::vector<std::string> names;
  names.reserve(size());
  for (const auto& e : elements_) names.push_back(base_.poset().label(e));
  return Poset::from_relation(std::move(names), order_);
}

std::optional<std::string> ClLattice::ortholattice_violation() const {
  const std::size_t m = size();
  if (m < 2 || elements_.front().members().any() || !elements_.back().members().all()) {
    return "empty set and P must be the least and greatest closed sets";
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!leq(bottom(), i) || !leq(i, top())) return "bounds are not extremal";
    if (ortho(ortho(i)) != i) return "orthocomplement is not an involution";
    if (meet(i, ortho(i)) != bottom()) return "X meet X+ is not empty";
    if (join(i, ortho(i)) != top()) return "X join X+ is not P";
    for (std::size_t j = 0; j < m; ++j) {
      if (leq(i, j) && !leq(ortho(j), ortho(i))) return "orthocomplement is not antitone";
      const std::size_t mt = meet(i, j);
      const std::size_t jn = join(i, j);
      if (!leq(mt, i) || !leq(mt, j) || !leq(i, jn) || !leq(j, jn)) return "meet/join are not bounds";
      for (std::size_t k = 0; k < m; ++k) {
        if (leq(i, k) && leq(j, k) && !leq(jn, k)) return "join is not the least upper bound";
        if (leq(k, i) && leq(k, j) && !leq(k, mt)) return "meet is not the greatest lower bound";
      }
    }
  }
  return std::nullopt;
}

ClLattice closed_sets(const BoundedPoset& bp) {
  const std::size_t n = bp.size();
  std::set<Bits> found;
  found.insert(Bits(n, true));
  for (Element x = 0; x < n; ++x) {
    const Bits& gen = bp.complement_row(x);
    std::vector<Bits> fresh;
    for (const auto& s : found) fresh.push_back(s & gen);
    found.insert(fresh.begin(), fresh.end());
  }
  std::vector<Bits> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::vector<Subset> elements;
  elements.reserve(sorted.size());
  for (auto& b : sorted) elements.push_back(bp.poset().subset(std::move(b)));

  ClLattice cl(bp, std::move(elements));
  if (auto why = cl.ortholattice_violation()) throw Error(ErrorKind::InvariantViolation, *why);
  return cl;
}

}  // namespace posetkit

#include "posetkit/completion.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "posetkit/complement.hpp"
#include "posetkit/cones.hpp"
#include "posetkit/errors.hpp"

namespace posetkit {

namespace {

std::vector<Subset> to_subsets(const Poset& p, std::vector<Bits> sorted) {
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::vector<Subset> out;
  out.reserve(sorted.size());
  for (auto& b : sorted) out.push_back(p.subset(std::move(b)));
  return out;
}

Poset labelled(const Poset& base, const std::vector<Subset>& elements, const std::vector<Bits>& up) {
  std::vector<std::string> names;
  names.reserve(elements.size());
  for (const auto& e : elements) names.push_back(base.label(e));
  return Poset::from_relation(std::move(names), up);
}

}  // namespace

// ---- Dedekind-MacNeille -------------------------------------------------

DMLattice::DMLattice(Poset p, std::vector<Subset> elements) : base_(std::move(p)), elements_(std::move(elements)) {
  const std::size_t m = elements_.size();
  for (std::size_t i = 0; i < m; ++i) index_.emplace(elements_[i].members(), i);
  order_.assign(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (elements_[i].members().is_subset_of(elements_[j].members())) order_[i].set(j);
    }
  }
  for (Element x = 0; x < base_.size(); ++x) principal_.push_back(index_.at(base_.down_row(x)));
}

std::optional<std::size_t> DMLattice::find(const Subset& s) const {
  base_.require_owned(s);
  auto it = index_.find(s.members());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DMLattice::index_of(const Subset& s) const {
  if (auto i = find(s)) return *i;
  throw Error(ErrorKind::InvalidArgument, base_.label(s) + " is not a cut");
}

std::size_t DMLattice::meet(std::size_t i, std::size_t j) const {
  auto it = index_.find(elements_[i].members() & elements_[j].members());
  if (it == index_.end()) throw Error(ErrorKind::InvariantViolation, "cuts not closed under intersection");
  return it->second;
}

std::size_t DMLattice::join(std::size_t i, std::size_t j) const {
  const Bits u = elements_[i].members() | elements_[j].members();
  auto it = index_.find(raw::lower(base_, raw::upper(base_, u)));
  if (it == index_.end()) throw Error(ErrorKind::InvariantViolation, "LU of a union is not a cut");
  return it->second;
}

Poset DMLattice::as_poset() const { return labelled(base_, elements_, order_); }

std::optional<std::string> DMLattice::lattice_violation() const {
  const std::size_t m = size();
  for (std::size_t i = 0; i < m; ++i) {
    if (raw::lower(base_, raw::upper(base_, elements_[i].members())) != elements_[i].members()) {
      return "element " + base_.label(elements_[i]) + " is not LU-closed";
    }
    if (!leq(bottom(), i) || !leq(i, top())) return "bounds are not extremal";
    for (std::size_t j = 0; j < m; ++j) {
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

DMLattice dm_completion(const Poset& p) {
  const std::size_t n = p.size();
  std::set<Bits> found;
  found.insert(Bits(n, true));
  for (Element x = 0; x < n; ++x) {
    std::vector<Bits> fresh;
    for (const auto& s : found) fresh.push_back(s & p.down_row(x));
    found.insert(fresh.begin(), fresh.end());
  }
  DMLattice dm(p, to_subsets(p, std::vector<Bits>(found.begin(), found.end())));
  if (auto why = dm.lattice_violation()) throw Error(ErrorKind::InvariantViolation, *why);
  return dm;
}

PropertyReport embedding_check(const Poset& p) {
  const std::string name = "dm-embedding";
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p.leq(x, y) != p.down_row(x).is_subset_of(p.down_row(y))) {
        return PropertyReport::fail(name, {{"x", x}, {"y", y}});
      }
    }
  }
  std::unordered_map<Bits, Element, BitsHash> generator;
  for (Element x = 0; x < n; ++x) generator.emplace(p.down_row(x), x);
  auto principal = [&](const Bits& cut) -> std::optional<Element> {
    auto it = generator.find(cut);
    if (it == generator.end()) return std::nullopt;
    return it->second;
  };
  auto check = [&](const Bits& a) -> std::optional<PropertyReport> {
    const Bits ua = raw::upper(p, a);
    const Bits la = raw::lower(p, a);
    if (raw::least_of(p, ua) != principal(raw::lower(p, ua))) {
      auto r = PropertyReport::fail(name, {{"A", p.subset(a)}});
      r.note = "sup";
      return r;
    }
    if (raw::greatest_of(p, la) != principal(la)) {
      auto r = PropertyReport::fail(name, {{"A", p.subset(a)}});
      r.note = "inf";
      return r;
    }
    return std::nullopt;
  };
  if (n <= 12) {
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      if (auto r = check(Bits::from_u64(n, mask))) return *r;
    }
  } else {
    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        Bits a(n);
        a.set(x);
        a.set(y);
        if (auto r = check(a)) return *r;
      }
    }
  }
  return PropertyReport::pass(name);
}

bool dm_orthogonal(const DMLattice& dm, std::size_t i, std::size_t j) {
  return dm.join(i, j) == dm.top() && dm.meet(i, j) == dm.bottom();
}

bool dm_condition_ii(const BoundedPoset& bp, const Subset& a, const Subset& b) {
  const Poset& p = bp.poset();
  if (sup_of(p, a | b) != std::optional<Element>(bp.top())) return false;
  Bits zero(bp.size());
  zero.set(bp.bottom());
  bool ok = true;
  a.members().for_each([&](Element x) {
    b.members().for_each([&](Element y) {
      if (ok && (p.down_row(x) & p.down_row(y)) != zero) ok = false;
    });
  });
  return ok;
}

PropertyReport dm_orthogonality_check(const BoundedPoset& bp) {
  const std::string name = "dm-orthogonality";
  const DMLattice dm = dm_completion(bp.poset());
  for (std::size_t i = 0; i < dm.size(); ++i) {
    for (std::size_t j = 0; j < dm.size(); ++j) {
      if (dm_orthogonal(dm, i, j) != dm_condition_ii(bp, dm.element(i), dm.element(j))) {
        return PropertyReport::fail(name, {{"A", dm.element(i)}, {"B", dm.element(j)}});
      }
    }
  }
  return PropertyReport::pass(name);
}

PropertyReport dm_element_orthogonality(const BoundedPoset& bp) {
  const std::string name = "dm-element-orthogonality";
  const DMLattice dm = dm_completion(bp.poset());
  for (Element a = 0; a < bp.size(); ++a) {
    for (Element b = 0; b < bp.size(); ++b) {
      if (perp(bp, a, b) != dm_orthogonal(dm, dm.principal(a), dm.principal(b))) {
        return PropertyReport::fail(name, {{"a", a}, {"b", b}});
      }
    }
  }
  return PropertyReport::pass(name);
}

// ---- convex subsets -----------------------------------------------------

Subset convex_hull(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return p.subset(raw::downclose(p, a.members()) & raw::upclose(p, a.members()));
}

Subset convex_hull_between(const Poset& p, const Subset& a) {
  p.require_owned(a);
  Bits out(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    if (p.down_row(x).intersects(a.members()) && p.up_row(x).intersects(a.members())) out.set(x);
  }
  return p.subset(std::move(out));
}

bool is_convex(const Poset& p, const Subset& a) { return convex_hull(p, a) == a; }

ConvPoset::ConvPoset(BoundedPoset bp, std::vector<Subset> elements)
    : base_(std::move(bp)), elements_(std::move(elements)) {
  const Poset& p = base_.poset();
  const std::size_t m = elements_.size();
  std::vector<Bits> dc;
  std::vector<Bits> uc;
  dc.reserve(m);
  uc.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    index_.emplace(elements_[i].members(), i);
    dc.push_back(raw::downclose(p, elements_[i].members()));
    uc.push_back(raw::upclose(p, elements_[i].members()));
  }
  up_.assign(m, Bits(m));
  down_.assign(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // A ⊑ B: A ⊆ B↓ and B ⊆ A↑.
      if (elements_[i].members().is_subset_of(dc[j]) && elements_[j].members().is_subset_of(uc[i])) {
        up_[i].set(j);
        down_[j].set(i);
      }
    }
  }
  Bits lo(p.size());
  lo.set(base_.bottom());
  Bits hi(p.size());
  hi.set(base_.top());
  bottom_ = index_.at(lo);
  top_ = index_.at(hi);
}

std::optional<std::size_t> ConvPoset::find(const Subset& s) const {
  base_.poset().require_owned(s);
  auto it = index_.find(s.members());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ConvPoset::index_of(const Subset& s) const {
  if (auto i = find(s)) return *i;
  throw Error(ErrorKind::InvalidArgument, base_.poset().label(s) + " is not a non-empty convex subset");
}

std::optional<std::size_t> ConvPoset::sup(std::size_t i, std::size_t j) const {
  const Bits ub = up_[i] & up_[j];
  std::optional<std::size_t> out;
  ub.for_each([&](std::size_t k) {
    if (!out && ub.is_subset_of(up_[k])) out = k;
  });
  return out;
}

std::optional<std::size_t> ConvPoset::inf(std::size_t i, std::size_t j) const {
  const Bits lb = down_[i] & down_[j];
  std::optional<std::size_t> out;
  lb.for_each([&](std::size_t k) {
    if (!out && lb.is_subset_of(down_[k])) out = k;
  });
  return out;
}

bool ConvPoset::orthogonal(std::size_t i, std::size_t j) const {
  // The top is a common upper bound, so it is the supremum exactly when it
  // is the only one. Dually for the bottom.
  return (up_[i] & up_[j]).count() == 1 && (down_[i] & down_[j]).count() == 1;
}

Poset ConvPoset::as_poset() const { return labelled(base_.poset(), elements_, up_); }

ConvPoset conv_star(const BoundedPoset& bp, std::size_t cap) {
  const Poset& p = bp.poset();
  const std::size_t n = p.size();
  if (n > cap || n > 30) {
    throw Error(ErrorKind::SizeCapExceeded,
                "Conv* enumerates 2^n subsets; poset has " + std::to_string(n) + " elements, cap is " +
                    std::to_string(cap));
  }
  std::vector<std::uint64_t> up(n);
  std::vector<std::uint64_t> down(n);
  for (Element x = 0; x < n; ++x) {
    up[x] = p.up_row(x).to_u64();
    down[x] = p.down_row(x).to_u64();
  }
  std::vector<Bits> convex;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::uint64_t dc = 0;
    std::uint64_t uc = 0;
    for (std::uint64_t r = mask; r; r &= r - 1) {
      const auto x = static_cast<std::size_t>(__builtin_ctzll(r));
      dc |= down[x];
      uc |= up[x];
    }
    if ((dc & uc) == mask) convex.push_back(Bits::from_u64(n, mask));
  }
  ConvPoset cp(bp, to_subsets(p, std::move(convex)));
  for (std::size_t i = 0; i < cp.size(); ++i) {
    if (!cp.leq(cp.bottom(), i) || !cp.leq(i, cp.top())) {
      throw Error(ErrorKind::InvariantViolation, p.label(cp.element(i)) + " lies outside [{0},{1}]");
    }
    for (std::size_t j = i + 1; j < cp.size(); ++j) {
      if (cp.leq(i, j) && cp.leq(j, i)) {
        throw Error(ErrorKind::InvariantViolation, "sqsubseteq is not antisymmetric on convex sets");
      }
    }
  }
  return cp;
}

SubsetOrthogonality subsets_orthogonal(const BoundedPoset& bp, const Subset& a, const Subset& b) {
  bp.poset().require_owned(a);
  bp.poset().require_owned(b);
  if (a.empty() || b.empty()) return {true, true};
  bool holds = true;
  a.members().for_each([&](Element x) {
    if (!b.members().is_subset_of(bp.complement_row(x))) holds = false;
  });
  return {holds, false};
}

PropertyReport hull_orthogonality_check(const BoundedPoset& bp, const HullCheckOptions& options) {
  const std::string name = "hull-orthogonality";
  const Poset& p = bp.poset();
  const std::size_t n = p.size();
  const bool sampled = n > options.size_cap;
  if (sampled && !options.samples) {
    throw Error(ErrorKind::SizeCapExceeded, name + " checks all subset pairs; poset has " + std::to_string(n) +
                                                " elements, cap is " + std::to_string(options.size_cap));
  }
  const ConvPoset cp = conv_star(bp);

  // Per-mask tables: the hull's index in Conv* and the common complements.
  const std::uint64_t count = 1ull << n;
  std::vector<std::uint32_t> hull_index(count, 0);
  std::vector<std::uint64_t> perp_all(count, 0);
  std::vector<std::uint64_t> perp_row(n);
  for (Element x = 0; x < n; ++x) perp_row[x] = bp.complement_row(x).to_u64();
  const std::uint64_t full = count - 1;
  perp_all[0] = full;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    perp_all[mask] = perp_all[mask & (mask - 1)] & perp_row[low];
    const Subset hull = convex_hull(p, p.subset(Bits::from_u64(n, mask)));
    hull_index[mask] = static_cast<std::uint32_t>(cp.index_of(hull));
  }
  auto holds_at = [&](std::uint64_t a, std::uint64_t b) {
    const bool lhs = (b & ~perp_all[a]) == 0;
    return lhs == cp.orthogonal(hull_index[a], hull_index[b]);
  };
  auto fail = [&](std::uint64_t a, std::uint64_t b) {
    return PropertyReport::fail(name, {{"A", p.subset(Bits::from_u64(n, a))}, {"B", p.subset(Bits::from_u64(n, b))}});
  };

  if (sampled) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < *options.samples; ++i) {
      std::uint64_t a = 0;
      std::uint64_t b = 0;
      while (!a) a = rng() & full;
      while (!b) b = rng() & full;
      if (!holds_at(a, b)) return fail(a, b);
    }
    auto r = PropertyReport::pass(name);
    r.exhaustive = false;
    r.samples = *options.samples;
    return r;
  }
  for (std::uint64_t a = 1; a < count; ++a) {
    for (std::uint64_t b = 1; b < count; ++b) {
      if (!holds_at(a, b)) return fail(a, b);
    }
  }
  return PropertyReport::pass(name);
}

}  // namespace posetkit

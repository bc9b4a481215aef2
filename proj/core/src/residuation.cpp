#include "posetkit/residuation.hpp"

#include <random>

#include "posetkit/complement.hpp"
#include "posetkit/cones.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/structure.hpp"

namespace posetkit {

namespace {

Bits pair_bits(std::size_t n, Element x, Element y) {
  Bits b(n);
  b.set(x);
  b.set(y);
  return b;
}

Bits single(std::size_t n, Element x) {
  Bits b(n);
  b.set(x);
  return b;
}

Bits op_value(const BoundedPoset& bp, Op op, Element a, Element b) {
  const Poset& p = bp.poset();
  const std::size_t n = bp.size();
  switch (op) {
    case Op::Circ:
      return raw::max_of(p, raw::lower(p, pair_bits(n, a, b)));
    case Op::Imp: {
      Bits s = bp.complement_row(a);
      s.set(b);
      return raw::min_of(p, raw::upper(p, s));
    }
    case Op::Odot: {
      Bits s = bp.complement_row(b);
      s.set(a);
      Bits t = raw::upper(p, s);
      t.set(b);
      return raw::max_of(p, raw::lower(p, t));
    }
    case Op::Hook: {
      Bits s = bp.complement_row(a) | raw::lower(p, pair_bits(n, a, b));
      return raw::min_of(p, raw::upper(p, s));
    }
  }
  return Bits(n);
}

// Compact u64 cone helpers for the exponential conditions (n <= 63).
struct Masks {
  std::size_t n;
  std::uint64_t full;
  std::vector<std::uint64_t> up;
  std::vector<std::uint64_t> down;

  explicit Masks(const Poset& p) : n(p.size()), full(n == 64 ? ~0ull : (1ull << n) - 1) {
    for (Element x = 0; x < n; ++x) {
      up.push_back(p.up_row(x).to_u64());
      down.push_back(p.down_row(x).to_u64());
    }
  }
  std::uint64_t U(std::uint64_t a) const {
    std::uint64_t r = full;
    while (a) {
      r &= up[static_cast<std::size_t>(__builtin_ctzll(a))];
      a &= a - 1;
    }
    return r;
  }
  std::uint64_t L(std::uint64_t a) const {
    std::uint64_t r = full;
    while (a) {
      r &= down[static_cast<std::size_t>(__builtin_ctzll(a))];
      a &= a - 1;
    }
    return r;
  }
};

// Condition 5 at one instance: U(L(A,y),C) = UL(A, U(y,C)).
bool condition5_at(const Masks& m, std::uint64_t a, std::uint64_t c, Element y) {
  const std::uint64_t ybit = 1ull << y;
  return m.U(m.L(a | ybit) | c) == m.U(m.L(a | m.U(ybit | c)));
}

// Condition 6 at one instance: L(U(A,B),z) = LU(A, L(B,z)).
bool condition6_at(const Masks& m, std::uint64_t a, std::uint64_t b, Element z) {
  const std::uint64_t zbit = 1ull << z;
  return m.L(m.U(a | b) | zbit) == m.L(m.U(a | m.L(b | zbit)));
}

std::uint64_t random_nonempty_submask(std::mt19937_64& rng, std::uint64_t mask) {
  if (!mask) return 0;
  while (true) {
    const std::uint64_t s = rng() & mask;
    if (s) return s;
  }
}

PropertyReport subset_condition(const BoundedPoset& bp, int k, const ConditionOptions& options) {
  const std::string name = "condition-" + std::to_string(k);
  const Poset& p = bp.poset();
  const std::size_t n = bp.size();
  const bool sampled = n > options.size_cap;
  if (sampled && !options.samples) {
    throw Error(ErrorKind::SizeCapExceeded, name + " is exponential; poset has " + std::to_string(n) +
                                                " elements, cap is " + std::to_string(options.size_cap));
  }
  if (n > 63) throw Error(ErrorKind::SizeCapExceeded, name + " supports at most 63 elements");
  const Masks m(p);
  auto fail = [&](std::uint64_t s1, std::uint64_t s2, Element e) {
    const char* v1 = "A";
    const char* v2 = k == 5 ? "C" : "B";
    const char* v3 = k == 5 ? "y" : "z";
    return PropertyReport::fail(name, {{v1, p.subset(Bits::from_u64(n, s1))},
                                       {v2, p.subset(Bits::from_u64(n, s2))},
                                       {v3, e}});
  };

  if (sampled) {
    std::mt19937_64 rng(options.seed);
    std::size_t drawn = 0;
    for (std::size_t i = 0; i < *options.samples; ++i) {
      const Element e = static_cast<Element>(rng() % n);
      if (k == 5) {
        const std::uint64_t a = random_nonempty_submask(rng, m.full);
        const std::uint64_t c = random_nonempty_submask(rng, m.L(a));
        if (!c) continue;
        ++drawn;
        if (!condition5_at(m, a, c, e)) return fail(a, c, e);
      } else {
        const std::uint64_t a = random_nonempty_submask(rng, m.down[e]);
        const std::uint64_t b = random_nonempty_submask(rng, m.full);
        ++drawn;
        if (!condition6_at(m, a, b, e)) return fail(a, b, e);
      }
    }
    auto r = PropertyReport::pass(name);
    r.exhaustive = false;
    r.samples = drawn;
    return r;
  }

  if (k == 5) {
    for (std::uint64_t a = 1; a <= m.full; ++a) {
      const std::uint64_t la = m.L(a);
      // C ranges over the non-empty subsets of L(A), i.e. C <= A.
      for (std::uint64_t c = la; c; c = (c - 1) & la) {
        for (Element y = 0; y < n; ++y) {
          if (!condition5_at(m, a, c, y)) return fail(a, c, y);
        }
      }
    }
  } else {
    for (Element z = 0; z < n; ++z) {
      const std::uint64_t dz = m.down[z];
      for (std::uint64_t a = dz; a; a = (a - 1) & dz) {
        for (std::uint64_t b = 1; b <= m.full; ++b) {
          if (!condition6_at(m, a, b, z)) return fail(a, b, z);
        }
      }
    }
  }
  return PropertyReport::pass(name);
}

// Sampled (5)/(6) hypotheses are re-decided exhaustively up to this size.
constexpr std::size_t kSettleCap = 12;

PropertyReport implication(std::string name, bool hypothesis, const PropertyReport& conclusion) {
  if (!hypothesis) {
    auto r = PropertyReport::pass(std::move(name));
    r.vacuous = true;
    return r;
  }
  auto r = conclusion;
  r.note = conclusion.property;
  r.property = std::move(name);
  r.vacuous = false;
  return r;
}

}  // namespace

std::string_view to_string(Op op) {
  switch (op) {
    case Op::Circ: return "circ";
    case Op::Imp: return "imp";
    case Op::Odot: return "odot";
    case Op::Hook: return "hook";
  }
  return "?";
}

Op parse_op(std::string_view name) {
  if (name == "circ") return Op::Circ;
  if (name == "imp") return Op::Imp;
  if (name == "odot") return Op::Odot;
  if (name == "hook") return Op::Hook;
  throw Error(ErrorKind::InvalidArgument, "unknown operator '" + std::string(name) + "'");
}

Subset apply(const BoundedPoset& bp, Op op, Element a, Element b) {
  return bp.poset().subset(op_value(bp, op, a, b));
}
Subset circ(const BoundedPoset& bp, Element a, Element b) { return apply(bp, Op::Circ, a, b); }
Subset imp(const BoundedPoset& bp, Element a, Element b) { return apply(bp, Op::Imp, a, b); }
Subset odot(const BoundedPoset& bp, Element a, Element b) { return apply(bp, Op::Odot, a, b); }
Subset hook(const BoundedPoset& bp, Element a, Element b) { return apply(bp, Op::Hook, a, b); }

Subset hook_via_max(const BoundedPoset& bp, Element a, Element b) {
  const Poset& p = bp.poset();
  Bits s = bp.complement_row(a) | raw::max_of(p, raw::lower(p, pair_bits(bp.size(), a, b)));
  return p.subset(raw::min_of(p, raw::upper(p, s)));
}

OpTable::OpTable(const BoundedPoset& bp, Op op) : n_(bp.size()) {
  values_.reserve(n_ * n_);
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) values_.push_back(op_value(bp, op, a, b));
  }
}

PropertyReport monotone_left(const BoundedPoset& bp, Op op) {
  const std::string name = std::string(to_string(op)) + "-monotone-left";
  const Poset& p = bp.poset();
  const OpTable t(bp, op);
  const std::size_t n = bp.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!raw::le1(p, t.at(x, z), t.at(y, z))) return PropertyReport::fail(name, {{"x", x}, {"y", y}, {"z", z}});
      }
    }
  }
  return PropertyReport::pass(name);
}

PropertyReport monotone_right(const BoundedPoset& bp, Op op) {
  const std::string name = std::string(to_string(op)) + "-monotone-right";
  const Poset& p = bp.poset();
  const OpTable t(bp, op);
  const std::size_t n = bp.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!raw::le2(p, t.at(z, x), t.at(z, y))) return PropertyReport::fail(name, {{"x", x}, {"y", y}, {"z", z}});
      }
    }
  }
  return PropertyReport::pass(name);
}

PropertyReport weakly_antitone_left(const BoundedPoset& bp, Op op) {
  const std::string name = std::string(to_string(op)) + "-weakly-antitone-left";
  const OpTable t(bp, op);
  for (Element x = 0; x < bp.size(); ++x) {
    for (Element y = 0; y < bp.size(); ++y) {
      if (!raw::set_le(bp.poset(), t.at(bp.top(), y), t.at(x, y))) {
        return PropertyReport::fail(name, {{"x", x}, {"y", y}});
      }
    }
  }
  return PropertyReport::pass(name);
}

PropertyReport weakly_monotone_right(const BoundedPoset& bp, Op op) {
  const std::string name = std::string(to_string(op)) + "-weakly-monotone-right";
  const OpTable t(bp, op);
  for (Element x = 0; x < bp.size(); ++x) {
    for (Element y = 0; y < bp.size(); ++y) {
      if (!raw::set_le(bp.poset(), t.at(x, y), t.at(x, bp.top()))) {
        return PropertyReport::fail(name, {{"x", x}, {"y", y}});
      }
    }
  }
  return PropertyReport::pass(name);
}

std::vector<PropertyReport> monotonicity_report(const BoundedPoset& bp) {
  return {
      monotone_left(bp, Op::Circ),         monotone_left(bp, Op::Odot),
      monotone_right(bp, Op::Imp),         monotone_right(bp, Op::Hook),
      weakly_antitone_left(bp, Op::Hook),  weakly_monotone_right(bp, Op::Odot),
  };
}

namespace {

AdjointnessReport adjointness_for(const BoundedPoset& bp, Op conj, Op impl, const std::string& prefix) {
  const Poset& p = bp.poset();
  const std::size_t n = bp.size();
  const OpTable left(bp, conj);
  const OpTable right(bp, impl);
  AdjointnessReport out{PropertyReport::pass(prefix + "-forward"), PropertyReport::pass(prefix + "-backward"),
                        PropertyReport::pass(prefix)};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const bool lhs = raw::set_le(p, left.at(x, y), single(n, z));
        const bool rhs = raw::set_le(p, single(n, x), right.at(y, z));
        if (lhs && !rhs && out.forward.holds) {
          out.forward = PropertyReport::fail(prefix + "-forward", {{"x", x}, {"y", y}, {"z", z}});
        }
        if (rhs && !lhs && out.backward.holds) {
          out.backward = PropertyReport::fail(prefix + "-backward", {{"x", x}, {"y", y}, {"z", z}});
        }
      }
    }
  }
  out.both = all_of(prefix, {out.forward, out.backward});
  return out;
}

}  // namespace

AdjointnessReport adjointness_report(const BoundedPoset& bp) {
  return adjointness_for(bp, Op::Circ, Op::Imp, "adjoint");
}

AdjointnessReport odot_hook_adjointness(const BoundedPoset& bp) {
  return adjointness_for(bp, Op::Odot, Op::Hook, "odot-hook-adjoint");
}

PropertyReport condition(const BoundedPoset& bp, int k, const ConditionOptions& options) {
  if (k < 1 || k > 6) throw Error(ErrorKind::InvalidArgument, "condition index must be 1..6");
  if (k >= 5) return subset_condition(bp, k, options);

  const std::string name = "condition-" + std::to_string(k);
  const Poset& p = bp.poset();
  const std::size_t n = bp.size();
  for (Element x = 0; x < n; ++x) {
    const Bits& xp = bp.complement_row(x);
    for (Element y = 0; y < n; ++y) {
      const Bits xy = pair_bits(n, x, y);
      Bits lhs;
      Bits bound;
      switch (k) {
        case 1:
          lhs = raw::upper(p, xp | raw::lower(p, xy));
          bound = p.up_row(y);
          break;
        case 2: {
          Bits s = raw::upper(p, xp | single(n, y));
          s.set(x);
          lhs = raw::lower(p, s);
          bound = p.down_row(y);
          break;
        }
        case 3: {
          Bits s = raw::upper(p, xp | single(n, y));
          s.set(x);
          lhs = raw::upper(p, xp | raw::lower(p, s));
          bound = p.up_row(y);
          break;
        }
        default: {
          Bits s = raw::upper(p, xp | raw::lower(p, xy));
          s.set(x);
          lhs = raw::lower(p, s);
          bound = p.down_row(y);
          break;
        }
      }
      if (!lhs.is_subset_of(bound)) return PropertyReport::fail(name, {{"x", x}, {"y", y}});
    }
  }
  return PropertyReport::pass(name);
}

std::vector<PropertyReport> theorem_implications(const BoundedPoset& bp, const ConditionOptions& options) {
  const bool complemented = is_complemented(bp).holds;
  const auto hook_weak = weakly_antitone_left(bp, Op::Hook);
  const auto odot_weak = weakly_monotone_right(bp, Op::Odot);
  const auto adj = adjointness_report(bp);
  const auto oh = odot_hook_adjointness(bp);
  std::vector<PropertyReport> c(7);
  for (int k = 1; k <= 6; ++k) c[k] = condition(bp, k, options);
  // A sampled (5)/(6) that found nothing is no proof. If the conclusion it
  // would force fails, settle the hypothesis exhaustively when that is
  // affordable; otherwise mark the instance inconclusive.
  const bool conclusions_fail = !c[3].holds || !c[4].holds || !oh.forward.holds || !oh.backward.holds;
  for (int k = 5; k <= 6; ++k) {
    if (c[k].exhaustive || !c[k].holds || !conclusions_fail) continue;
    if (bp.size() <= kSettleCap) {
      ConditionOptions full = options;
      full.size_cap = kSettleCap;
      full.samples.reset();
      c[k] = condition(bp, k, full);
    }
  }

  std::vector<PropertyReport> out = {
      implication("hook-weak-antitone-implies-adjoint-forward", complemented && hook_weak.holds, adj.forward),
      implication("odot-weak-monotone-implies-adjoint-backward", complemented && odot_weak.holds, adj.backward),
      implication("weak-hook-and-odot-imply-adjoint-pair", complemented && hook_weak.holds && odot_weak.holds,
                  adj.both),
      implication("odot-weak-monotone-implies-uniquely-complemented", complemented && odot_weak.holds,
                  is_uniquely_complemented(bp)),
      implication("condition-1-implies-adjoint-forward", complemented && c[1].holds, adj.forward),
      implication("condition-2-implies-adjoint-backward", complemented && c[2].holds, adj.backward),
      implication("condition-3-implies-odot-hook-forward", complemented && c[3].holds, oh.forward),
      implication("condition-4-implies-odot-hook-backward", complemented && c[4].holds, oh.backward),
      implication("condition-5-implies-condition-3", complemented && c[5].holds, c[3]),
      implication("condition-5-implies-odot-hook-forward", complemented && c[5].holds, oh.forward),
      implication("condition-6-implies-condition-4", complemented && c[6].holds, c[4]),
      implication("condition-6-implies-odot-hook-forward", complemented && c[6].holds, oh.forward),
      implication("condition-6-implies-odot-hook-backward", complemented && c[6].holds, oh.backward),
  };
  for (auto& r : out) {
    const bool five = r.property.find("condition-5") == 0, six = r.property.find("condition-6") == 0;
    if (!five && !six) continue;
    const auto& hyp = five ? c[5] : c[6];
    if (hyp.exhaustive) continue;
    r.exhaustive = false;
    if (!r.vacuous && !r.holds) {
      auto inconclusive = PropertyReport::pass(r.property);
      inconclusive.vacuous = true;
      inconclusive.exhaustive = false;
      inconclusive.note = "hypothesis only sampled";
      r = std::move(inconclusive);
    }
  }
  return out;
}

}  // namespace posetkit

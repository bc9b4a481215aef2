#include "posetkit/structure.hpp"

#include "posetkit/complement.hpp"
#include "posetkit/completion.hpp"
#include "posetkit/cones.hpp"
#include "posetkit/errors.hpp"

namespace posetkit {

namespace {

Bits pair_bits(std::size_t n, Element x, Element y) {
  Bits b(n);
  b.set(x);
  b.set(y);
  return b;
}

Bits with(Bits b, Element x) {
  b.set(x);
  return b;
}

void require_form(int form, int max) {
  if (form < 1 || form > max) {
    throw Error(ErrorKind::InvalidArgument, "form/condition index " + std::to_string(form) + " out of range");
  }
}

std::vector<Binding> xyz(Element x, Element y, Element z, const IdentitySides& s) {
  return {{"x", x}, {"y", y}, {"z", z}, {"lhs", s.lhs}, {"rhs", s.rhs}};
}

}  // namespace

IdentitySides distributive_sides(const Poset& p, int form, Element x, Element y, Element z) {
  require_form(form, 4);
  const std::size_t n = p.size();
  using namespace raw;
  Bits lhs, rhs;
  switch (form) {
    case 1:
      lhs = lower(p, with(upper(p, pair_bits(n, x, y)), z));
      rhs = lower(p, upper(p, lower(p, pair_bits(n, x, z)) | lower(p, pair_bits(n, y, z))));
      break;
    case 2:
      lhs = upper(p, lower(p, with(upper(p, pair_bits(n, x, y)), z)));
      rhs = upper(p, lower(p, pair_bits(n, x, z)) | lower(p, pair_bits(n, y, z)));
      break;
    case 3:
      lhs = upper(p, with(lower(p, pair_bits(n, x, y)), z));
      rhs = upper(p, lower(p, upper(p, pair_bits(n, x, z)) | upper(p, pair_bits(n, y, z))));
      break;
    default:
      lhs = lower(p, upper(p, with(lower(p, pair_bits(n, x, y)), z)));
      rhs = lower(p, upper(p, pair_bits(n, x, z)) | upper(p, pair_bits(n, y, z)));
      break;
  }
  return {p.subset(std::move(lhs)), p.subset(std::move(rhs))};
}

PropertyReport is_distributive(const Poset& p, int form) {
  require_form(form, 4);
  const std::string name = form == 1 ? "distributive" : "distributive-" + std::to_string(form);
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        auto s = distributive_sides(p, form, x, y, z);
        if (!s.equal()) return PropertyReport::fail(name, xyz(x, y, z, s));
      }
    }
  }
  return PropertyReport::pass(name);
}

IdentitySides modular_sides(const Poset& p, int form, Element x, Element y, Element z) {
  require_form(form, 2);
  const std::size_t n = p.size();
  using namespace raw;
  Bits lhs, rhs;
  if (form == 1) {
    lhs = upper(p, with(lower(p, pair_bits(n, x, y)), z));
    rhs = upper(p, lower(p, with(upper(p, pair_bits(n, y, z)), x)));
  } else {
    lhs = lower(p, with(upper(p, pair_bits(n, x, y)), z));
    rhs = lower(p, upper(p, with(lower(p, pair_bits(n, y, z)), x)));
  }
  return {p.subset(std::move(lhs)), p.subset(std::move(rhs))};
}

PropertyReport is_modular_form(const Poset& p, int form) {
  require_form(form, 2);
  const std::string name = "modular-" + std::to_string(form);
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const bool applies = form == 1 ? p.leq(z, x) : p.leq(x, z);
        if (!applies) continue;
        auto s = modular_sides(p, form, x, y, z);
        if (!s.equal()) return PropertyReport::fail(name, xyz(x, y, z, s));
      }
    }
  }
  return PropertyReport::pass(name);
}

PropertyReport is_modular(const Poset& p) {
  auto first = is_modular_form(p, 1);
  auto second = is_modular_form(p, 2);
  auto out = all_of("modular", {first, second});
  out.note = first.holds == second.holds ? "" : "modular forms disagree";
  return out;
}

PropertyReport is_complemented(const BoundedPoset& bp) {
  for (Element x = 0; x < bp.size(); ++x) {
    if (bp.complement_row(x).none()) return PropertyReport::fail("complemented", {{"x", x}});
  }
  return PropertyReport::pass("complemented");
}

PropertyReport is_uniquely_complemented(const BoundedPoset& bp) {
  for (Element x = 0; x < bp.size(); ++x) {
    if (bp.complement_row(x).count() != 1) {
      return PropertyReport::fail("uniquely-complemented", {{"x", x}, {"complements", plus(bp, x)}});
    }
  }
  return PropertyReport::pass("uniquely-complemented");
}

PropertyReport is_boolean(const BoundedPoset& bp) {
  auto r = all_of("boolean", {is_distributive(bp.poset(), 1), is_complemented(bp)});
  return r;
}

PropertyReport is_pseudocomplemented(const BoundedPoset& bp) {
  const Poset& p = bp.poset();
  const std::size_t n = bp.size();
  for (Element a = 0; a < n; ++a) {
    Bits annihilators(n);
    for (Element x = 0; x < n; ++x) {
      Bits common = p.down_row(a) & p.down_row(x);
      if (common.count() == 1 && common.test(bp.bottom())) annihilators.set(x);
    }
    if (!raw::greatest_of(p, annihilators)) {
      return PropertyReport::fail("pseudocomplemented",
                                  {{"a", a}, {"maximal", p.subset(raw::max_of(p, annihilators))}});
    }
  }
  return PropertyReport::pass("pseudocomplemented");
}

bool is_n5_with_bounds(const BoundedPoset& bp, Element e, Element f, Element g) {
  const Element zero = bp.bottom();
  const Element one = bp.top();
  for (Element v : {e, f, g}) {
    if (v == zero || v == one) return false;
  }
  return bp.poset().lt(e, f) && perp(bp, g, e) && perp(bp, g, f);
}

PropertyReport has_n5_with_bounds(const BoundedPoset& bp) {
  const std::size_t n = bp.size();
  for (Element e = 0; e < n; ++e) {
    for (Element f = 0; f < n; ++f) {
      if (!bp.poset().lt(e, f)) continue;
      for (Element g = 0; g < n; ++g) {
        if (is_n5_with_bounds(bp, e, f, g)) {
          auto r = PropertyReport::pass("n5-with-bounds");
          r.witness = {{"e", e}, {"f", f}, {"g", g}};
          return r;
        }
      }
    }
  }
  auto r = PropertyReport::pass("n5-with-bounds");
  r.holds = false;
  return r;
}

PropertyReport complement_antichain_all(const BoundedPoset& bp) {
  const Poset& p = bp.poset();
  for (Element x = 0; x < bp.size(); ++x) {
    const Bits& row = bp.complement_row(x);
    std::optional<std::pair<Element, Element>> bad;
    row.for_each([&](Element lo) {
      if (bad) return;
      Bits above = p.up_row(lo) & row;
      above.reset(lo);
      if (above.any()) bad = std::make_pair(lo, above.first());
    });
    if (bad) {
      return PropertyReport::fail("complement-antichain", {{"x", x}, {"lo", bad->first}, {"hi", bad->second}});
    }
  }
  return PropertyReport::pass("complement-antichain");
}

PropertyReport complement_convex_all(const BoundedPoset& bp) {
  for (Element x = 0; x < bp.size(); ++x) {
    if (!is_convex(bp.poset(), plus(bp, x))) {
      return PropertyReport::fail("complement-convex", {{"x", x}, {"complements", plus(bp, x)}});
    }
  }
  return PropertyReport::pass("complement-convex");
}

bool antitone_holds_at(const BoundedPoset& bp, int condition, Element x, Element y) {
  require_form(condition, 5);
  const Poset& p = bp.poset();
  const std::size_t n = bp.size();
  const Bits& xp = bp.complement_row(x);
  const Bits& yp = bp.complement_row(y);
  switch (condition) {
    case 1: return !p.leq(x, y) || raw::set_le(p, yp, xp);
    case 2: return !p.leq(x, y) || raw::le1(p, yp, xp);
    case 3: return !p.leq(x, y) || raw::le2(p, yp, xp);
    case 4: {
      Bits lhs = raw::plus(bp, raw::min_of(p, raw::upper(p, pair_bits(n, x, y))));
      Bits rhs = raw::max_of(p, raw::lower(p, xp | yp));
      return raw::le1(p, lhs, rhs);
    }
    default: {
      Bits lhs = raw::min_of(p, raw::upper(p, xp | yp));
      Bits rhs = raw::plus(bp, raw::max_of(p, raw::lower(p, pair_bits(n, x, y))));
      return raw::le2(p, lhs, rhs);
    }
  }
}

PropertyReport antitone_condition(const BoundedPoset& bp, int condition) {
  require_form(condition, 5);
  static constexpr const char* names[] = {"antitone-i", "antitone-ii", "antitone-iii", "antitone-iv",
                                          "antitone-v"};
  const std::string name = names[condition - 1];
  for (Element x = 0; x < bp.size(); ++x) {
    for (Element y = 0; y < bp.size(); ++y) {
      if (!antitone_holds_at(bp, condition, x, y)) return PropertyReport::fail(name, {{"x", x}, {"y", y}});
    }
  }
  return PropertyReport::pass(name);
}

namespace {

PropertyReport implication(std::string name, bool hypothesis, const PropertyReport& conclusion) {
  if (!hypothesis) {
    auto r = PropertyReport::pass(std::move(name));
    r.vacuous = true;
    return r;
  }
  auto r = conclusion;
  r.property = std::move(name);
  r.vacuous = false;
  return r;
}

}  // namespace

AntitoneReport antitone_conditions(const BoundedPoset& bp) {
  AntitoneReport out;
  for (int c = 1; c <= 5; ++c) out.conditions[c - 1] = antitone_condition(bp, c);
  out.greatest_all = true;
  out.least_all = true;
  for (Element x = 0; x < bp.size(); ++x) {
    const Bits& row = bp.complement_row(x);
    if (!raw::greatest_of(bp.poset(), row)) out.greatest_all = false;
    if (!raw::least_of(bp.poset(), row)) out.least_all = false;
  }
  const bool complemented = is_complemented(bp).holds;
  const auto& c = out.conditions;
  out.implications = {
      implication("antitone-i-implies-ii", complemented && c[0].holds, c[1]),
      implication("antitone-i-implies-iii", complemented && c[0].holds, c[2]),
      implication("antitone-iv-implies-ii", complemented && c[3].holds, c[1]),
      implication("antitone-v-implies-iii", complemented && c[4].holds, c[2]),
      implication("antitone-i-implies-iv-given-greatest", complemented && c[0].holds && out.greatest_all, c[3]),
      implication("antitone-i-implies-v-given-least", complemented && c[0].holds && out.least_all, c[4]),
  };
  return out;
}

IdentitySides de_morgan_sides(const BoundedPoset& bp, int law, Element x, Element y) {
  require_form(law, 2);
  const Poset& p = bp.poset();
  const std::size_t n = bp.size();
  const Bits both = bp.complement_row(x) | bp.complement_row(y);
  Bits lhs, rhs;
  if (law == 1) {
    lhs = raw::plus(bp, raw::min_of(p, raw::upper(p, pair_bits(n, x, y))));
    rhs = raw::max_of(p, raw::lower(p, both));
  } else {
    lhs = raw::plus(bp, raw::max_of(p, raw::lower(p, pair_bits(n, x, y))));
    rhs = raw::min_of(p, raw::upper(p, both));
  }
  return {p.subset(std::move(lhs)), p.subset(std::move(rhs))};
}

PropertyReport de_morgan_law(const BoundedPoset& bp, int law) {
  require_form(law, 2);
  const std::string name = "de-morgan-" + std::to_string(law);
  for (Element x = 0; x < bp.size(); ++x) {
    for (Element y = 0; y < bp.size(); ++y) {
      auto s = de_morgan_sides(bp, law, x, y);
      if (!s.equal()) {
        return PropertyReport::fail(name, {{"x", x}, {"y", y}, {"lhs", s.lhs}, {"rhs", s.rhs}});
      }
    }
  }
  return PropertyReport::pass(name);
}

PropertyReport de_morgan_check(const BoundedPoset& bp) {
  return all_of("de-morgan", {de_morgan_law(bp, 1), de_morgan_law(bp, 2)});
}

PropertyReport prop2_check(const BoundedPoset& bp) {
  const std::string name = "distributive-unique-complement";
  if (!is_distributive(bp.poset(), 1).holds) {
    auto r = PropertyReport::pass(name);
    r.vacuous = true;
    return r;
  }
  const Poset& p = bp.poset();
  const std::size_t n = bp.size();
  for (Element a = 0; a < n; ++a) {
    const Bits& row = bp.complement_row(a);
    if (row.count() > 1) {
      const Element b = row.first();
      return PropertyReport::fail(name, {{"a", a}, {"b", b}, {"c", row.next(b + 1)}});
    }
  }
  if (!is_complemented(bp).holds) return PropertyReport::pass(name);
  auto prime = [&](Element x) { return bp.complement_row(x).first(); };
  for (Element x = 0; x < n; ++x) {
    if (prime(prime(x)) != x) {
      auto r = PropertyReport::fail(name, {{"x", x}});
      r.note = "complementation is not an involution";
      return r;
    }
    for (Element y = 0; y < n; ++y) {
      if (p.leq(x, y) && !p.leq(prime(y), prime(x))) {
        auto r = PropertyReport::fail(name, {{"x", x}, {"y", y}});
        r.note = "complementation is not antitone";
        return r;
      }
    }
  }
  return PropertyReport::pass(name);
}

std::vector<PropertyReport> bi_plus_properties(const BoundedPoset& bp) {
  const std::size_t n = bp.size();
  const bool complemented = is_complemented(bp).holds;
  std::vector<Bits> closure(n);
  for (Element x = 0; x < n; ++x) closure[x] = raw::plus(bp, bp.complement_row(x));

  PropertyReport extensive = PropertyReport::pass("bi-plus-extensive");
  for (Element a = 0; a < n && extensive.holds; ++a) {
    if (!closure[a].test(a) || raw::plus(bp, closure[a]) != bp.complement_row(a)) {
      extensive = PropertyReport::fail("bi-plus-extensive", {{"a", a}});
    }
  }

  bool injective = true;
  for (Element a = 0; a < n && injective; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (closure[a] == closure[b]) {
        injective = false;
        break;
      }
    }
  }
  auto is_singleton = [&](Element x) { return closure[x].count() == 1 && closure[x].test(x); };

  PropertyReport breaks = PropertyReport::pass("non-injective-breaks-involution");
  if (!complemented || injective) {
    breaks.vacuous = true;
  } else {
    bool some_fails = false;
    for (Element x = 0; x < n; ++x) some_fails = some_fails || !is_singleton(x);
    if (!some_fails) breaks = PropertyReport::fail("non-injective-breaks-involution", {});
  }

  PropertyReport descent = PropertyReport::pass("injective-descent");
  if (!complemented || !injective) {
    descent.vacuous = true;
  } else {
    for (Element a = 0; a < n; ++a) {
      if (is_singleton(a)) continue;
      bool found = false;
      closure[a].for_each([&](Element b) { found = found || is_singleton(b); });
      if (!found) {
        descent = PropertyReport::fail("injective-descent", {{"a", a}});
        break;
      }
    }
  }
  if (!complemented) extensive.vacuous = extensive.holds;
  return {extensive, breaks, descent};
}

}  // namespace posetkit

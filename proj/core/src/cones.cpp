#include "posetkit/cones.hpp"

namespace posetkit {

namespace raw {

Bits upper(const Poset& p, const Bits& a) {
  Bits r(p.size(), true);
  a.for_each([&](Element x) { r &= p.up_row(x); });
  return r;
}

Bits lower(const Poset& p, const Bits& a) {
  Bits r(p.size(), true);
  a.for_each([&](Element x) { r &= p.down_row(x); });
  return r;
}

Bits min_of(const Poset& p, const Bits& a) {
  Bits r = a;
  a.for_each([&](Element x) {
    Bits below = p.down_row(x) & a;
    if (below.count() > 1) r.reset(x);
  });
  return r;
}

Bits max_of(const Poset& p, const Bits& a) {
  Bits r = a;
  a.for_each([&](Element x) {
    Bits above = p.up_row(x) & a;
    if (above.count() > 1) r.reset(x);
  });
  return r;
}

Bits upclose(const Poset& p, const Bits& a) {
  Bits r(p.size());
  a.for_each([&](Element x) { r |= p.up_row(x); });
  return r;
}

Bits downclose(const Poset& p, const Bits& a) {
  Bits r(p.size());
  a.for_each([&](Element x) { r |= p.down_row(x); });
  return r;
}

bool set_le(const Poset& p, const Bits& a, const Bits& b) {
  if (a.none() || b.none()) return true;
  return b.is_subset_of(upper(p, a));
}

bool le1(const Poset& p, const Bits& a, const Bits& b) {
  return a.is_subset_of(downclose(p, b));
}

bool le2(const Poset& p, const Bits& a, const Bits& b) {
  return b.is_subset_of(upclose(p, a));
}

std::optional<Element> least_of(const Poset& p, const Bits& a) {
  std::optional<Element> out;
  a.for_each([&](Element x) {
    if (!out && a.is_subset_of(p.up_row(x))) out = x;
  });
  return out;
}

std::optional<Element> greatest_of(const Poset& p, const Bits& a) {
  std::optional<Element> out;
  a.for_each([&](Element x) {
    if (!out && a.is_subset_of(p.down_row(x))) out = x;
  });
  return out;
}

}  // namespace raw

Subset upper(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return p.subset(raw::upper(p, a.members()));
}

Subset lower(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return p.subset(raw::lower(p, a.members()));
}

Subset min_of(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return p.subset(raw::min_of(p, a.members()));
}

Subset max_of(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return p.subset(raw::max_of(p, a.members()));
}

Subset upclose(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return p.subset(raw::upclose(p, a.members()));
}

Subset downclose(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return p.subset(raw::downclose(p, a.members()));
}

bool set_le(const Poset& p, const Subset& a, const Subset& b) {
  p.require_owned(a);
  p.require_owned(b);
  return raw::set_le(p, a.members(), b.members());
}

bool le1(const Poset& p, const Subset& a, const Subset& b) {
  p.require_owned(a);
  p.require_owned(b);
  return raw::le1(p, a.members(), b.members());
}

bool le2(const Poset& p, const Subset& a, const Subset& b) {
  p.require_owned(a);
  p.require_owned(b);
  return raw::le2(p, a.members(), b.members());
}

bool sqle(const Poset& p, const Subset& a, const Subset& b) {
  return le1(p, a, b) && le2(p, a, b);
}

std::optional<Element> sup_of(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return raw::least_of(p, raw::upper(p, a.members()));
}

std::optional<Element> inf_of(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return raw::greatest_of(p, raw::lower(p, a.members()));
}

std::optional<Element> least_of(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return raw::least_of(p, a.members());
}

std::optional<Element> greatest_of(const Poset& p, const Subset& a) {
  p.require_owned(a);
  return raw::greatest_of(p, a.members());
}

bool is_antichain(const Poset& p, const Subset& a) {
  p.require_owned(a);
  bool ok = true;
  a.members().for_each([&](Element x) {
    if ((p.up_row(x) & a.members()).count() > 1) ok = false;
  });
  return ok;
}

}  // namespace posetkit

#include "posetkit/poset.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_map>
#include <unordered_set>

#include "posetkit/errors.hpp"

namespace posetkit {

namespace {

std::uint64_t next_poset_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

std::unordered_map<std::string_view, Element> name_index(const std::vector<std::string>& names) {
  std::unordered_map<std::string_view, Element> index;
  index.reserve(names.size());
  for (Element i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw Error(ErrorKind::DuplicateName, "element name '" + names[i] + "' appears more than once");
    }
  }
  return index;
}

// Returns a cycle (as element indices, first repeated at the end) or empty.
std::vector<Element> find_cycle(const std::vector<std::vector<Element>>& succ) {
  const std::size_t n = succ.size();
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<Element> parent(n, n);
  for (Element root = 0; root < n; ++root) {
    if (mark[root] != Mark::White) continue;
    std::vector<std::pair<Element, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Grey;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == succ[v].size()) {
        mark[v] = Mark::Black;
        stack.pop_back();
        continue;
      }
      const Element w = succ[v][pos++];
      if (mark[w] == Mark::Grey) {
        std::vector<Element> cycle{w};
        for (Element u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (mark[w] == Mark::White) {
        mark[w] = Mark::Grey;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

}  // namespace

// --- Subset -----------------------------------------------------------------

void Subset::same_owner(const Subset& o) const {
  if (owner_ != o.owner_) {
    throw Error(ErrorKind::ForeignSubset, "subsets belong to different posets");
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  same_owner(other);
  return members_.is_subset_of(other.members_);
}

Subset& Subset::operator&=(const Subset& o) {
  same_owner(o);
  members_ &= o.members_;
  return *this;
}

Subset& Subset::operator|=(const Subset& o) {
  same_owner(o);
  members_ |= o.members_;
  return *this;
}

Subset& Subset::operator-=(const Subset& o) {
  same_owner(o);
  members_.subtract(o.members_);
  return *this;
}

// --- Poset ------------------------------------------------------------------

Poset::Poset(std::vector<std::string> names, std::vector<Bits> up)
    : id_(next_poset_id()), names_(std::move(names)), up_(std::move(up)) {
  const std::size_t n = names_.size();
  down_.assign(n, Bits(n));
  for (Element x = 0; x < n; ++x) {
    up_[x].for_each([&](Element y) { down_[y].set(x); });
  }
  for (Element x = 0; x < n; ++x) {
    up_[x].for_each([&](Element y) {
      if (y == x) return;
      // x < y is a cover iff nothing lies strictly between.
      Bits between = up_[x] & down_[y];
      if (between.count() == 2) covers_.emplace_back(x, y);
    });
  }
}

Poset Poset::from_covers(std::vector<std::string> names, std::span<const NamedCover> covers) {
  const auto index = name_index(names);
  const std::size_t n = names.size();
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorKind::UnknownName, "cover mentions unknown element '" + s + "'");
    return it->second;
  };

  std::vector<std::vector<Element>> succ(n);
  for (const auto& [lo, hi] : covers) {
    succ[lookup(lo)].push_back(lookup(hi));
  }
  if (auto cycle = find_cycle(succ); !cycle.empty()) {
    std::string text;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) text += " < ";
      text += names[cycle[i]];
    }
    throw Error(ErrorKind::CycleDetected, text);
  }

  // Reverse topological order via DFS post-order.
  std::vector<Element> order;
  std::vector<bool> seen(n, false);
  for (Element root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<Element, std::size_t>> stack{{root, 0}};
    seen[root] = true;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == succ[v].size()) {
        order.push_back(v);
        stack.pop_back();
        continue;
      }
      const Element w = succ[v][pos++];
      if (!seen[w]) {
        seen[w] = true;
        stack.emplace_back(w, 0);
      }
    }
  }

  std::vector<Bits> up(n, Bits(n));
  for (Element v : order) {
    up[v].set(v);
    for (Element w : succ[v]) up[v] |= up[w];
  }
  return Poset(std::move(names), std::move(up));
}

Poset Poset::from_relation(std::vector<std::string> names, std::vector<Bits> up) {
  (void)name_index(names);
  const std::size_t n = names.size();
  if (up.size() != n) throw Error(ErrorKind::InvalidArgument, "relation has wrong number of rows");
  for (Element x = 0; x < n; ++x) {
    if (up[x].size() != n) throw Error(ErrorKind::InvalidArgument, "relation row has wrong length");
    if (!up[x].test(x)) {
      throw Error(ErrorKind::InvalidArgument, "relation is not reflexive at '" + names[x] + "'");
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (up[x].test(y) && up[y].test(x)) {
        throw Error(ErrorKind::InvalidArgument,
                    "relation is not antisymmetric: '" + names[x] + "' and '" + names[y] + "'");
      }
    }
    bool transitive = true;
    up[x].for_each([&](Element y) { transitive = transitive && up[y].is_subset_of(up[x]); });
    if (!transitive) {
      throw Error(ErrorKind::InvalidArgument, "relation is not transitive at '" + names[x] + "'");
    }
  }
  return Poset(std::move(names), std::move(up));
}

std::optional<Element> Poset::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Element Poset::index(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::UnknownName, "no element named '" + std::string(name) + "'");
}

std::vector<std::size_t> Poset::heights() const {
  const std::size_t n = size();
  std::vector<std::size_t> h(n, 0);
  // Elements with smaller down-sets come first in any linear extension.
  std::vector<Element> order(n);
  for (Element i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](Element a, Element b) { return down_[a].count() < down_[b].count(); });
  for (Element v : order) {
    for (const auto& [lo, hi] : covers_) {
      if (hi == v) h[v] = std::max(h[v], h[lo] + 1);
    }
  }
  return h;
}

Subset Poset::singleton(Element e) const {
  Bits b(size());
  b.set(e);
  return Subset(id_, std::move(b));
}

Subset Poset::subset(std::initializer_list<Element> elems) const {
  return subset(std::span<const Element>(elems.begin(), elems.size()));
}

Subset Poset::subset(std::span<const Element> elems) const {
  Bits b(size());
  for (Element e : elems) {
    if (e >= size()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
    b.set(e);
  }
  return Subset(id_, std::move(b));
}

Subset Poset::subset(Bits members) const {
  if (members.size() != size()) throw Error(ErrorKind::InvalidArgument, "mask has wrong length");
  return Subset(id_, std::move(members));
}

Subset Poset::subset_named(std::span<const std::string> names) const {
  Bits b(size());
  for (const auto& s : names) b.set(index(s));
  return Subset(id_, std::move(b));
}

Subset Poset::subset_named(std::initializer_list<std::string_view> names) const {
  Bits b(size());
  for (auto s : names) b.set(index(s));
  return Subset(id_, std::move(b));
}

void Poset::require_owned(const Subset& s) const {
  if (s.owner() != id_ || s.universe() != size()) {
    throw Error(ErrorKind::ForeignSubset, "subset does not belong to this poset");
  }
}

std::string Poset::label(const Subset& s) const {
  require_owned(s);
  return label(s.members());
}

std::string Poset::label(const Bits& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ',';
    out += names_[e];
    first = false;
  });
  out += '}';
  return out;
}

// --- BoundedPoset -----------------------------------------------------------

BoundedPoset::BoundedPoset(Poset p, Element bottom, Element top)
    : base_(std::move(p)), bottom_(bottom), top_(top) {
  const std::size_t n = base_.size();
  perp_.assign(n, Bits(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      Bits upper = base_.up_row(a) & base_.up_row(b);
      Bits lower = base_.down_row(a) & base_.down_row(b);
      // top is always an upper bound, so sup = top iff it is the only one.
      if (upper.count() == 1 && upper.test(top_) && lower.count() == 1 && lower.test(bottom_)) {
        perp_[a].set(b);
        perp_[b].set(a);
      }
    }
  }
}

BoundedPoset as_bounded(Poset p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorKind::NoBottom, "empty poset");
  std::optional<Element> bottom;
  std::optional<Element> top;
  for (Element x = 0; x < n; ++x) {
    if (p.up_row(x).all()) bottom = x;
    if (p.down_row(x).all()) top = x;
  }
  if (!bottom) throw Error(ErrorKind::NoBottom, "poset has no least element");
  if (!top) throw Error(ErrorKind::NoTop, "poset has no greatest element");
  if (*bottom == *top) throw Error(ErrorKind::Trivial, "least and greatest element coincide");
  return BoundedPoset(std::move(p), *bottom, *top);
}

BoundedPoset horizontal_sum(const BoundedPoset& p, const BoundedPoset& q) {
  const std::size_t np = p.size();
  std::vector<Element> q_middle;
  for (Element y = 0; y < q.size(); ++y) {
    if (y != q.bottom() && y != q.top()) q_middle.push_back(y);
  }
  const std::size_t n = np + q_middle.size();

  std::vector<std::string> names = p.poset().names();
  std::unordered_set<std::string> taken(names.begin(), names.end());
  std::vector<Element> q_to_new(q.size(), 0);
  q_to_new[q.bottom()] = p.bottom();
  q_to_new[q.top()] = p.top();
  for (std::size_t k = 0; k < q_middle.size(); ++k) {
    std::string nm = q.name(q_middle[k]);
    while (taken.count(nm)) nm += "_r";
    taken.insert(nm);
    names.push_back(std::move(nm));
    q_to_new[q_middle[k]] = np + k;
  }

  std::vector<Bits> up(n, Bits(n));
  for (Element x = 0; x < np; ++x) {
    p.poset().up_row(x).for_each([&](Element y) { up[x].set(y); });
  }
  for (Element y : q_middle) up[p.bottom()].set(q_to_new[y]);
  for (Element y : q_middle) {
    q.poset().up_row(y).for_each([&](Element z) { up[q_to_new[y]].set(q_to_new[z]); });
  }
  return as_bounded(Poset::from_relation(std::move(names), std::move(up)));
}

Poset chain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return chain(std::move(names));
}

Poset chain(std::vector<std::string> names) {
  const std::size_t n = names.size();
  std::vector<Bits> up(n, Bits(n));
  for (Element i = 0; i < n; ++i) {
    for (Element j = i; j < n; ++j) up[i].set(j);
  }
  return Poset::from_relation(std::move(names), std::move(up));
}

BoundedPoset add_bounds(const Poset& middle, std::string bottom_name, std::string top_name) {
  const std::size_t m = middle.size();
  const std::size_t n = m + 2;
  std::vector<std::string> names;
  names.reserve(n);
  names.push_back(std::move(bottom_name));
  for (const auto& s : middle.names()) names.push_back(s);
  names.push_back(std::move(top_name));
  std::vector<Bits> up(n, Bits(n));
  up[0].fill();
  for (Element x = 0; x < m; ++x) {
    middle.up_row(x).for_each([&](Element y) { up[x + 1].set(y + 1); });
    up[x + 1].set(n - 1);
  }
  up[n - 1].set(n - 1);
  return as_bounded(Poset::from_relation(std::move(names), std::move(up)));
}

}  // namespace posetkit

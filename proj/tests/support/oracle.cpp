#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

Order Order::of(const posetkit::Poset& p) {
  Order o;
  o.n = p.size();
  o.le.assign(o.n, std::vector<bool>(o.n, false));
  for (std::size_t i = 0; i < o.n; ++i) {
    for (std::size_t j = 0; j < o.n; ++j) o.le[i][j] = p.leq(i, j);
  }
  return o;
}

Set Order::upper(const Set& a) const {
  Set out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] && !le[y][x]) ok = false;
    }
    out[x] = ok;
  }
  return out;
}

Set Order::lower(const Set& a) const {
  Set out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] && !le[x][y]) ok = false;
    }
    out[x] = ok;
  }
  return out;
}

Set Order::min_of(const Set& a) const {
  Set out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (!a[x]) continue;
    bool minimal = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] && y != x && le[y][x]) minimal = false;
    }
    out[x] = minimal;
  }
  return out;
}

Set Order::max_of(const Set& a) const {
  Set out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (!a[x]) continue;
    bool maximal = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] && y != x && le[x][y]) maximal = false;
    }
    out[x] = maximal;
  }
  return out;
}

Set Order::upclose(const Set& a) const {
  Set out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] && le[y][x]) out[x] = true;
    }
  }
  return out;
}

Set Order::downclose(const Set& a) const {
  Set out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] && le[x][y]) out[x] = true;
    }
  }
  return out;
}

std::optional<std::size_t> Order::least(const Set& a) const {
  for (std::size_t x = 0; x < n; ++x) {
    if (!a[x]) continue;
    bool below_all = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] && !le[x][y]) below_all = false;
    }
    if (below_all) return x;
  }
  return std::nullopt;
}

std::optional<std::size_t> Order::greatest(const Set& a) const {
  for (std::size_t x = 0; x < n; ++x) {
    if (!a[x]) continue;
    bool above_all = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] && !le[y][x]) above_all = false;
    }
    if (above_all) return x;
  }
  return std::nullopt;
}

bool Order::set_le(const Set& a, const Set& b) const {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a[x] && b[y] && !le[x][y]) return false;
    }
  }
  return true;
}

bool Order::le1(const Set& a, const Set& b) const {
  for (std::size_t x = 0; x < n; ++x) {
    if (!a[x]) continue;
    bool found = false;
    for (std::size_t y = 0; y < n; ++y) found = found || (b[y] && le[x][y]);
    if (!found) return false;
  }
  return true;
}

bool Order::le2(const Set& a, const Set& b) const {
  for (std::size_t y = 0; y < n; ++y) {
    if (!b[y]) continue;
    bool found = false;
    for (std::size_t x = 0; x < n; ++x) found = found || (a[x] && le[x][y]);
    if (!found) return false;
  }
  return true;
}

bool Order::perp(std::size_t a, std::size_t b) const {
  return sup(pair(a, b)) == std::optional<std::size_t>(top()) && inf(pair(a, b)) == std::optional<std::size_t>(bottom());
}

Set Order::plus(const Set& a) const {
  Set out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] && !perp(x, y)) ok = false;
    }
    out[x] = ok;
  }
  return out;
}

bool Order::is_convex(const Set& a) const {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (a[x] && a[z] && le[x][y] && le[y][z] && !a[y]) return false;
      }
    }
  }
  return true;
}

Set Order::single(std::size_t x) const {
  Set s(n, false);
  s[x] = true;
  return s;
}

Set Order::pair(std::size_t x, std::size_t y) const {
  Set s(n, false);
  s[x] = true;
  s[y] = true;
  return s;
}

std::size_t Order::bottom() const {
  auto b = least(full());
  if (!b) throw std::logic_error("no bottom");
  return *b;
}

std::size_t Order::top() const {
  auto t = greatest(full());
  if (!t) throw std::logic_error("no top");
  return *t;
}

Set unite(Set a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
  return a;
}

Set intersect(Set a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
  return a;
}

bool subset_of(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

Set from_mask(std::size_t n, std::uint64_t mask) {
  Set s(n, false);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1u;
  return s;
}

Set random_set(std::size_t n, std::mt19937_64& rng) {
  Set s(n, false);
  for (std::size_t i = 0; i < n; ++i) s[i] = rng() & 1u;
  return s;
}

posetkit::Subset to_subset(const posetkit::Poset& p, const Set& s) {
  std::vector<posetkit::Element> elems;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) elems.push_back(i);
  }
  return p.subset(std::span<const posetkit::Element>(elems));
}

Set from_subset(const posetkit::Subset& s) {
  Set out(s.universe(), false);
  for (auto e : s.elements()) out[e] = true;
  return out;
}

namespace {

using Matrix = std::vector<std::vector<bool>>;

bool is_partial_order(const Matrix& le) {
  const std::size_t k = le.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && le[a][b] && le[b][a]) return false;
      for (std::size_t c = 0; c < k; ++c) {
        if (le[a][b] && le[b][c] && !le[a][c]) return false;
      }
    }
  }
  return true;
}

Matrix relabel(const Matrix& le, const std::vector<std::size_t>& perm) {
  const std::size_t k = le.size();
  Matrix out(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) out[perm[a]][perm[b]] = le[a][b];
  }
  return out;
}

}  // namespace

std::vector<Matrix> labelled_posets(std::size_t k) {
  if (k > 5) throw std::invalid_argument("labelled enumeration is limited to 5 points");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  std::vector<Matrix> out;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix le(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a) le[a][a] = true;
    std::size_t c = code;
    for (const auto& [a, b] : pairs) {
      const std::size_t digit = c % 3;
      c /= 3;
      if (digit == 1) le[a][b] = true;
      if (digit == 2) le[b][a] = true;
    }
    if (is_partial_order(le)) out.push_back(std::move(le));
  }
  return out;
}

namespace {

// Elements can only correspond when they have as many elements above and below.
std::vector<std::pair<std::size_t, std::size_t>> degrees(const Matrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> out(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (m[x][y]) ++out[x].first;
      if (m[y][x]) ++out[x].second;
    }
  }
  return out;
}

bool extend(const Matrix& a, const Matrix& b, const std::vector<std::pair<std::size_t, std::size_t>>& da,
            const std::vector<std::pair<std::size_t, std::size_t>>& db, std::vector<std::size_t>& map,
            std::vector<bool>& used, std::size_t x) {
  if (x == a.size()) return true;
  for (std::size_t y = 0; y < b.size(); ++y) {
    if (used[y] || da[x] != db[y]) continue;
    bool ok = true;
    for (std::size_t w = 0; w < x && ok; ++w) ok = a[w][x] == b[map[w]][y] && a[x][w] == b[y][map[w]];
    if (!ok) continue;
    map[x] = y;
    used[y] = true;
    if (extend(a, b, da, db, map, used, x + 1)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

// Backtracking over bijections; every full mapping is checked pair by pair.
bool isomorphic(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> map(a.size());
  std::vector<bool> used(a.size(), false);
  return extend(a, b, degrees(a), degrees(b), map, used, 0);
}

bool isomorphic(const posetkit::Poset& a, const posetkit::Poset& b) {
  return isomorphic(Order::of(a).le, Order::of(b).le);
}

std::size_t class_count(std::size_t k) {
  std::set<Matrix> representatives;
  for (const auto& le : labelled_posets(k)) {
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Matrix best = le;
    do {
      best = std::min(best, relabel(le, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    representatives.insert(best);
  }
  return representatives.size();
}

posetkit::Poset to_poset(const Matrix& le) {
  const std::size_t k = le.size();
  std::vector<std::string> names;
  std::vector<posetkit::Bits> up;
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back("p" + std::to_string(a));
    posetkit::Bits row(k);
    for (std::size_t b = 0; b < k; ++b) {
      if (le[a][b]) row.set(b);
    }
    up.push_back(row);
  }
  return posetkit::Poset::from_relation(std::move(names), std::move(up));
}

}  // namespace oracle

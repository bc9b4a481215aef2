// Canonical labelling of finite posets by colour refinement and
// individualization. Cells are ordered by isomorphism-invariant signatures,
// so the minimum adjacency string over all leaves is a complete invariant.

#include <algorithm>
#include <numeric>

#include "posetkit/poset.hpp"

namespace posetkit {

namespace {

using Colouring = std::vector<std::size_t>;

struct Signature {
  std::size_t colour;
  std::vector<std::size_t> above;
  std::vector<std::size_t> below;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

class Canonizer {
 public:
  explicit Canonizer(const Poset& p) : p_(p), n_(p.size()) {
    for (Element x = 0; x < n_; ++x) {
      Bits strict_up = p.up_row(x);
      strict_up.reset(x);
      Bits strict_down = p.down_row(x);
      strict_down.reset(x);
      strict_up_.push_back(std::move(strict_up));
      strict_down_.push_back(std::move(strict_down));
    }
  }

  std::vector<Element> run() {
    Colouring c(n_, 0);
    refine(c);
    search(c);
    return best_perm_;
  }

 private:
  // Colours are cell start positions in the ordered partition.
  void refine(Colouring& c) const {
    std::vector<Element> order(n_);
    while (true) {
      std::vector<Signature> sig(n_);
      for (Element x = 0; x < n_; ++x) {
        sig[x].colour = c[x];
        strict_up_[x].for_each([&](Element y) { sig[x].above.push_back(c[y]); });
        strict_down_[x].for_each([&](Element y) { sig[x].below.push_back(c[y]); });
        std::sort(sig[x].above.begin(), sig[x].above.end());
        std::sort(sig[x].below.begin(), sig[x].below.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](Element a, Element b) { return sig[a] < sig[b]; });
      Colouring next(n_);
      std::size_t cells = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == 0 || sig[order[i]] != sig[order[i - 1]]) {
          next[order[i]] = i;
          ++cells;
        } else {
          next[order[i]] = next[order[i - 1]];
        }
      }
      const std::size_t before = distinct(c);
      c = std::move(next);
      if (cells == before) return;
    }
  }

  static std::size_t distinct(const Colouring& c) {
    Colouring s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  bool twins(Element a, Element b) const {
    return strict_up_[a] == strict_up_[b] && strict_down_[a] == strict_down_[b];
  }

  void search(const Colouring& c) {
    // Find the first non-singleton cell.
    std::vector<std::size_t> cell_size(n_, 0);
    for (Element x = 0; x < n_; ++x) ++cell_size[c[x]];
    std::size_t target = n_;
    for (std::size_t col = 0; col < n_; ++col) {
      if (cell_size[col] > 1) {
        target = col;
        break;
      }
    }
    if (target == n_) {
      leaf(c);
      return;
    }
    std::vector<Element> tried;
    for (Element v = 0; v < n_; ++v) {
      if (c[v] != target) continue;
      // Swapping twins is an automorphism fixing everything individualized so far.
      if (std::any_of(tried.begin(), tried.end(), [&](Element t) { return twins(t, v); })) continue;
      tried.push_back(v);
      Colouring child = c;
      for (Element x = 0; x < n_; ++x) {
        if (c[x] == target && x != v) child[x] = target + 1;
      }
      refine(child);
      search(child);
    }
  }

  void leaf(const Colouring& c) {
    // c is a bijection onto 0..n-1 here.
    std::vector<Element> inverse(n_);
    for (Element x = 0; x < n_; ++x) inverse[c[x]] = x;
    std::string s;
    s.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) s.push_back(p_.leq(inverse[i], inverse[j]) ? '1' : '0');
    }
    if (best_perm_.empty() || s < best_string_) {
      best_string_ = std::move(s);
      best_perm_ = c;
    }
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<Bits> strict_up_;
  std::vector<Bits> strict_down_;
  std::string best_string_;
  std::vector<Element> best_perm_;
};

}  // namespace

std::vector<Element> canonical_labelling(const Poset& p) {
  if (p.size() == 0) return {};
  return Canonizer(p).run();
}

std::string canonical_form(const Poset& p) {
  const std::size_t n = p.size();
  const auto perm = canonical_labelling(p);
  std::vector<Element> inverse(n);
  for (Element x = 0; x < n; ++x) inverse[perm[x]] = x;

  std::string out;
  out.push_back(static_cast<char>(n & 0xff));
  out.push_back(static_cast<char>((n >> 8) & 0xff));
  unsigned char byte = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(inverse[i], inverse[j])) byte |= static_cast<unsigned char>(1u << bit);
      if (++bit == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        bit = 0;
      }
    }
  }
  if (bit) out.push_back(static_cast<char>(byte));
  return out;
}

}  // namespace posetkit

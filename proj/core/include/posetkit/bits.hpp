#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace posetkit {

/// Fixed-length dynamic bitset. All binary operations require equal lengths.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n, bool value = false);

  static Bits from_u64(std::size_t n, std::uint64_t mask);

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

  void fill() noexcept;
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  bool all() const noexcept { return count() == n_; }

  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const noexcept;
  std::size_t first() const noexcept { return next(0); }

  bool is_subset_of(const Bits& other) const noexcept;
  bool intersects(const Bits& other) const noexcept;

  /// Low 64 bits; meaningful only when size() <= 64.
  std::uint64_t to_u64() const noexcept { return words_.empty() ? 0 : words_[0]; }

  std::vector<std::size_t> indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int bit = __builtin_ctzll(word);
        f(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  Bits& operator&=(const Bits& o) noexcept;
  Bits& operator|=(const Bits& o) noexcept;
  Bits& operator^=(const Bits& o) noexcept;
  /// Clears every bit that is set in `o`.
  Bits& subtract(const Bits& o) noexcept;
  Bits operator~() const;

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

  friend bool operator==(const Bits&, const Bits&) = default;
  /// Word-wise order; only used for associative containers.
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  std::size_t hash() const noexcept;

 private:
  void trim() noexcept;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical presentation order for sets of elements: by cardinality, then
/// lexicographically by the ascending member-index sequence.
bool canonical_less(const Bits& a, const Bits& b);

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept { return b.hash(); }
};

}  // namespace posetkit

#include "posetkit/bits.hpp"

#include <algorithm>

namespace posetkit {

namespace {
constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
}  // namespace

Bits::Bits(std::size_t n, bool value) : n_(n), words_(words_for(n), value ? ~std::uint64_t{0} : 0) {
  trim();
}

Bits Bits::from_u64(std::size_t n, std::uint64_t mask) {
  Bits b(n);
  if (!b.words_.empty()) b.words_[0] = mask;
  b.trim();
  return b;
}

void Bits::trim() noexcept {
  if (n_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
}

void Bits::fill() noexcept {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  trim();
}

void Bits::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::size_t Bits::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool Bits::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t Bits::next(std::size_t from) const noexcept {
  if (from >= n_) return n_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word) return std::min(n_, w * 64 + static_cast<std::size_t>(__builtin_ctzll(word)));
    if (++w == words_.size()) return n_;
    word = words_[w];
  }
}

bool Bits::is_subset_of(const Bits& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool Bits::intersects(const Bits& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::vector<std::size_t> Bits::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

Bits& Bits::operator&=(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bits& Bits::operator^=(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

Bits& Bits::subtract(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

Bits Bits::operator~() const {
  Bits r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

std::size_t Bits::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ n_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const Bits& a, const Bits& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  std::size_t i = a.first();
  std::size_t j = b.first();
  while (i < a.size() && j < b.size()) {
    if (i != j) return i < j;
    i = a.next(i + 1);
    j = b.next(j + 1);
  }
  return false;
}

}  // namespace posetkit

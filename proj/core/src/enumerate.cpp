#include "posetkit/enumerate.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "posetkit/errors.hpp"
#include "posetkit/parallel.hpp"

namespace posetkit {

std::size_t default_threads() {
  if (const char* env = std::getenv("POSETKIT_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

constexpr std::size_t kMaxMiddle = 10;

std::vector<std::string> letter_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

// Relabels `p` into its canonical labelling so that every class has exactly
// one representative regardless of how it was generated.
Poset canonical_representative(const Poset& p) {
  const std::size_t n = p.size();
  const auto perm = canonical_labelling(p);
  std::vector<Bits> up(n, Bits(n));
  for (Element x = 0; x < n; ++x) {
    p.up_row(x).for_each([&](Element y) { up[perm[x]].set(perm[y]); });
  }
  return Poset::from_relation(letter_names(n), std::move(up));
}

std::vector<Poset> grow(const std::vector<Poset>& smaller, std::size_t m, std::size_t threads) {
  std::vector<std::map<std::string, Poset>> found(smaller.size());
  parallel_for(smaller.size(), threads, [&](std::size_t i) {
    const Poset& q = smaller[i];
    const std::size_t k = q.size();
    std::vector<std::uint64_t> down(k);
    for (Element x = 0; x < k; ++x) down[x] = q.down_row(x).to_u64();
    for (std::uint64_t ideal = 0; ideal < (1ull << k); ++ideal) {
      bool closed = true;
      for (std::uint64_t r = ideal; r && closed; r &= r - 1) {
        const std::uint64_t d = down[static_cast<std::size_t>(__builtin_ctzll(r))];
        closed = (d & ~ideal) == 0;
      }
      if (!closed) continue;
      std::vector<Bits> up(m, Bits(m));
      for (Element x = 0; x < k; ++x) {
        q.up_row(x).for_each([&](Element y) { up[x].set(y); });
        if ((ideal >> x) & 1u) up[x].set(k);
      }
      up[k].set(k);
      Poset p = Poset::from_relation(letter_names(m), std::move(up));
      std::string form = canonical_form(p);
      if (!found[i].count(form)) found[i].emplace(std::move(form), std::move(p));
    }
  });
  // Ordered merge: the result depends only on the set of forms.
  std::map<std::string, const Poset*> merged;
  for (const auto& part : found) {
    for (const auto& [form, p] : part) merged.emplace(form, &p);
  }
  std::vector<Poset> out;
  out.reserve(merged.size());
  for (const auto& [form, p] : merged) out.push_back(canonical_representative(*p));
  return out;
}

}  // namespace

std::vector<Poset> generate_posets(std::size_t m, std::size_t threads) {
  if (m > kMaxMiddle) {
    throw Error(ErrorKind::SizeCapExceeded, "enumeration supports at most " + std::to_string(kMaxMiddle) +
                                                " middle elements, got " + std::to_string(m));
  }
  std::vector<Poset> level{Poset::from_relation({}, {})};
  for (std::size_t k = 1; k <= m; ++k) level = grow(level, k, threads);
  return level;
}

const std::vector<Poset>& posets_up_to_iso(std::size_t m) {
  if (m > kMaxMiddle) {
    throw Error(ErrorKind::SizeCapExceeded, "enumeration supports at most " + std::to_string(kMaxMiddle) +
                                                " middle elements, got " + std::to_string(m));
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Poset>> cache;
  std::lock_guard lock(mutex);
  if (cache.empty()) cache.emplace(0, std::vector<Poset>{Poset::from_relation({}, {})});
  std::size_t have = cache.rbegin()->first;
  while (have < m) {
    auto next = grow(cache.at(have), have + 1, default_threads());
    cache.emplace(++have, std::move(next));
  }
  return cache.at(m);
}

std::vector<BoundedPoset> enumerate_bounded(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "bounded posets need at least 2 elements");
  const auto& middles = posets_up_to_iso(n - 2);
  std::vector<BoundedPoset> out;
  out.reserve(middles.size());
  for (const auto& mid : middles) out.push_back(add_bounds(mid));
  return out;
}

}  // namespace posetkit

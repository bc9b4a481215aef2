#include "posetkit/search.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>

#include "posetkit/enumerate.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/parallel.hpp"
#include "posetkit/registry.hpp"

namespace posetkit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Either a suite (verify mode only) or a parsed expression.
struct Matcher {
  std::optional<std::string> suite;
  std::optional<Predicate> expr;
  SearchMode mode;

  std::optional<std::vector<PropertyReport>> match(const BoundedPoset& bp, const EvalContext& ctx) const {
    if (suite) {
      auto r = run_suite(bp, *suite, ctx);
      if (r.holds) return std::nullopt;
      return std::vector<PropertyReport>{std::move(r)};
    }
    std::vector<PropertyReport> reports;
    if (!expr->evaluate(bp, ctx, &reports)) return std::nullopt;
    return reports;
  }
};

Matcher make_matcher(const SearchSpec& spec) {
  Matcher m{std::nullopt, std::nullopt, spec.mode};
  const auto& suites = suite_names();
  if (spec.mode == SearchMode::VerifyUniversal &&
      std::find(suites.begin(), suites.end(), spec.predicate) != suites.end()) {
    m.suite = spec.predicate;
  } else {
    m.expr = Predicate::parse(spec.predicate);
  }
  return m;
}

}  // namespace

std::uint64_t class_seed(const Poset& p, std::uint64_t seed) { return splitmix64(fnv1a(canonical_form(p)) ^ seed); }

SearchResult run_search(const SearchSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  if (spec.max_size < 2 || spec.min_size < 2) {
    throw Error(ErrorKind::InvalidArgument, "search sizes must be at least 2");
  }
  if (spec.max_size > 12) {
    throw Error(ErrorKind::SizeCapExceeded, "enumeration supports bounded posets of at most 12 elements, got " +
                                                std::to_string(spec.max_size));
  }
  const Matcher matcher = make_matcher(spec);
  const std::size_t threads = spec.threads == 0 ? default_threads() : spec.threads;

  SearchResult result;
  result.per_size.assign(spec.max_size + 1, 0);
  bool stop = false;

  auto process = [&](const std::vector<BoundedPoset>& batch) {
    std::vector<std::optional<std::vector<PropertyReport>>> outcome(batch.size());
    parallel_for(batch.size(), threads, [&](std::size_t i) {
      const auto ctx = EvalContext::with_cap(spec.exhaustive_cap, spec.samples, class_seed(batch[i], spec.seed));
      outcome[i] = matcher.match(batch[i], ctx);
    });
    for (std::size_t i = 0; i < batch.size() && !stop; ++i) {
      const std::size_t n = batch[i].size();
      if (n >= result.per_size.size()) result.per_size.resize(n + 1, 0);
      ++result.per_size[n];
      ++result.examined;
      if (!outcome[i]) continue;
      result.matches.push_back({batch[i], std::move(*outcome[i])});
      if (spec.mode == SearchMode::FindFirst) stop = true;
    }
  };

  for (std::size_t n = spec.min_size; n <= spec.max_size && !stop; ++n) process(enumerate_bounded(n));

  if (!stop && !spec.extra.empty()) {
    std::vector<std::pair<std::string, const BoundedPoset*>> extra;
    std::set<std::string> seen;
    for (const auto& bp : spec.extra) {
      if (bp.size() >= spec.min_size && bp.size() <= spec.max_size) continue;
      std::string form = canonical_form(bp);
      if (seen.insert(form).second) extra.emplace_back(std::move(form), &bp);
    }
    std::sort(extra.begin(), extra.end());
    std::vector<BoundedPoset> batch;
    for (const auto& [form, bp] : extra) batch.push_back(*bp);
    process(batch);
  }

  result.passed = spec.mode != SearchMode::VerifyUniversal || result.matches.empty();
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace posetkit

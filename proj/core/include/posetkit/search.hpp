#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posetkit/poset.hpp"
#include "posetkit/report.hpp"

namespace posetkit {

enum class SearchMode { FindFirst, FindAll, VerifyUniversal };

struct SearchSpec {
  std::size_t min_size = 2;
  std::size_t max_size = 2;
  /// A predicate expression, or in verify mode also a suite name. In verify
  /// mode a match is a counterexample: a poset where the suite fails, or
  /// where the expression holds.
  std::string predicate;
  SearchMode mode = SearchMode::FindAll;
  std::uint64_t seed = 0;
  /// Exponential checks run exhaustively up to this size, sampled above.
  std::size_t exhaustive_cap = 8;
  std::size_t samples = 200;
  /// 0 means default_threads().
  std::size_t threads = 0;
  /// Extra candidates evaluated after the enumerated classes (for sizes
  /// beyond the enumeration bound). Duplicates of enumerated classes are
  /// skipped.
  std::vector<BoundedPoset> extra;
};

struct SearchMatch {
  BoundedPoset poset;
  std::vector<PropertyReport> reports;
};

struct SearchResult {
  std::size_t examined = 0;
  /// Classes examined per size, index = size.
  std::vector<std::size_t> per_size;
  std::vector<SearchMatch> matches;
  /// Verify mode: no counterexample found.
  bool passed = true;
  double elapsed_seconds = 0;
};

/// Per-class seed: splitmix64 of (FNV-1a of the canonical form) xor seed.
std::uint64_t class_seed(const Poset& p, std::uint64_t seed);

/// Throws PredicateUnknown, SyntaxError, SizeCapExceeded.
SearchResult run_search(const SearchSpec& spec);

}  // namespace posetkit

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posetkit/poset.hpp"

// The text format:
//
//   # comment
//   elements: 0 a b 1
//   covers:
//   0 < a
//   a < 1
//
// Blank lines are ignored. "elements:" appears exactly once, before
// "covers:"; every cover line is three whitespace-separated tokens.

namespace posetkit {

struct PosetFile {
  std::vector<std::string> names;
  std::vector<Poset::NamedCover> covers;
};

/// Throws SyntaxError ("line L, column C: ...").
PosetFile parse_poset_file(std::string_view text);
/// parse_poset_file followed by from_covers.
Poset parse_poset(std::string_view text);
/// Reads and parses a file; throws InvalidArgument when it cannot be read.
Poset load_poset(const std::string& path);

/// Elements in index order, covers in (lo, hi) order.
std::string serialize(const Poset& p);

/// Hasse diagram as a DOT digraph, one rank per height, edges upward.
std::string to_dot(const Poset& p, std::string_view graph_name = "P");

}  // namespace posetkit

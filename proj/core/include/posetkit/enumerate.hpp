#pragma once

#include <cstddef>
#include <vector>

#include "posetkit/poset.hpp"

namespace posetkit {

/// One poset per isomorphism class on m elements, in canonical labelling
/// with names "a", "b", ..., sorted by canonical form. Each class of size m
/// is grown from the classes of size m-1 by adding a maximal element above
/// every order ideal. Uncached; used to cross-check thread independence.
std::vector<Poset> generate_posets(std::size_t m, std::size_t threads);

/// Cached generate_posets with default_threads(). Throws SizeCapExceeded
/// above 10 elements.
const std::vector<Poset>& posets_up_to_iso(std::size_t m);

/// One bounded poset per isomorphism class of size n >= 2: the posets on
/// n-2 elements with "0" and "1" added.
std::vector<BoundedPoset> enumerate_bounded(std::size_t n);

}  // namespace posetkit

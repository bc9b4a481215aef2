#pragma once

#include <optional>

#include "posetkit/poset.hpp"

// Cone and closure operators on subsets of a finite poset. Every function
// throws ForeignSubset when handed a subset owned by another poset.
//
// Quantified comparisons follow the literal reading on the empty set:
// set_le(∅, B), le1(∅, B) and le2(A, ∅) are vacuously true.

namespace posetkit {

/// Common upper bounds U(A); U(∅) = P.
Subset upper(const Poset& p, const Subset& a);
/// Common lower bounds L(A); L(∅) = P.
Subset lower(const Poset& p, const Subset& a);

Subset min_of(const Poset& p, const Subset& a);
Subset max_of(const Poset& p, const Subset& a);

/// Smallest upset containing A.
Subset upclose(const Poset& p, const Subset& a);
/// Smallest down set containing A.
Subset downclose(const Poset& p, const Subset& a);

/// x <= y for all x in A and all y in B.
bool set_le(const Poset& p, const Subset& a, const Subset& b);
/// Every x in A lies below some y in B.
bool le1(const Poset& p, const Subset& a, const Subset& b);
/// Every y in B lies above some x in A.
bool le2(const Poset& p, const Subset& a, const Subset& b);
/// le1 and le2.
bool sqle(const Poset& p, const Subset& a, const Subset& b);

/// Least element of U(A), if any.
std::optional<Element> sup_of(const Poset& p, const Subset& a);
/// Greatest element of L(A), if any.
std::optional<Element> inf_of(const Poset& p, const Subset& a);

/// Least / greatest element of A itself, if any.
std::optional<Element> least_of(const Poset& p, const Subset& a);
std::optional<Element> greatest_of(const Poset& p, const Subset& a);

bool is_antichain(const Poset& p, const Subset& a);

// Raw mask versions used by the hot loops; no ownership checks.
namespace raw {
Bits upper(const Poset& p, const Bits& a);
Bits lower(const Poset& p, const Bits& a);
Bits min_of(const Poset& p, const Bits& a);
Bits max_of(const Poset& p, const Bits& a);
Bits upclose(const Poset& p, const Bits& a);
Bits downclose(const Poset& p, const Bits& a);
bool set_le(const Poset& p, const Bits& a, const Bits& b);
bool le1(const Poset& p, const Bits& a, const Bits& b);
bool le2(const Poset& p, const Bits& a, const Bits& b);
std::optional<Element> least_of(const Poset& p, const Bits& a);
std::optional<Element> greatest_of(const Poset& p, const Bits& a);
}  // namespace raw

}  // namespace posetkit

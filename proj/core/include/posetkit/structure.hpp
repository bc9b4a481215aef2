#pragma once

#include <array>
#include <vector>

#include "posetkit/poset.hpp"
#include "posetkit/report.hpp"

// Structural predicates on bounded posets. Each check scans its quantified
// variables in element order and reports the first failing instance, so the
// witness is the lexicographically first one. The *_sides / *_at functions
// evaluate a single instance and are what a witness is re-checked against.

namespace posetkit {

/// Both sides of a set identity evaluated at one instance.
struct IdentitySides {
  Subset lhs;
  Subset rhs;
  bool equal() const { return lhs == rhs; }
};

/// The four equivalent distributive identities:
///   1: L(U(x,y),z)  = LU(L(x,z),L(y,z))
///   2: UL(U(x,y),z) = U(L(x,z),L(y,z))
///   3: U(L(x,y),z)  = UL(U(x,z),U(y,z))
///   4: LU(L(x,y),z) = L(U(x,z),U(y,z))
IdentitySides distributive_sides(const Poset& p, int form, Element x, Element y, Element z);
PropertyReport is_distributive(const Poset& p, int form = 1);

/// Modular identities:
///   1: U(L(x,y),z) = UL(x,U(y,z))  for z <= x
///   2: L(U(x,y),z) = LU(x,L(y,z))  for x <= z
IdentitySides modular_sides(const Poset& p, int form, Element x, Element y, Element z);
PropertyReport is_modular_form(const Poset& p, int form);
/// Both forms; `note` records a disagreement between them.
PropertyReport is_modular(const Poset& p);

PropertyReport is_complemented(const BoundedPoset& bp);
PropertyReport is_uniquely_complemented(const BoundedPoset& bp);
/// Distributive (form 1) and complemented.
PropertyReport is_boolean(const BoundedPoset& bp);

/// Every a has a greatest x with L(a,x) = {0}. The witness binds the failing
/// element `a` and `maximal`, the maximal such x.
PropertyReport is_pseudocomplemented(const BoundedPoset& bp);

/// 0 < e < f < 1 and g with e,f both complements of g: the five elements
/// form an N5 sublattice containing the bounds.
bool is_n5_with_bounds(const BoundedPoset& bp, Element e, Element f, Element g);
/// Existential: holds (with witness e,f,g) iff such a configuration exists.
PropertyReport has_n5_with_bounds(const BoundedPoset& bp);

/// (x⁺, <=) is an antichain for every x; witness x, lo < hi in x⁺.
PropertyReport complement_antichain_all(const BoundedPoset& bp);
/// x⁺ is convex for every x; witness x.
PropertyReport complement_convex_all(const BoundedPoset& bp);

/// Conditions on pairs:
///   1: x <= y implies y⁺ <= x⁺
///   2: x <= y implies y⁺ <=_1 x⁺
///   3: x <= y implies y⁺ <=_2 x⁺
///   4: (Min U(x,y))⁺ <=_1 Max L(x⁺,y⁺)
///   5: Min U(x⁺,y⁺) <=_2 (Max L(x,y))⁺
bool antitone_holds_at(const BoundedPoset& bp, int condition, Element x, Element y);
PropertyReport antitone_condition(const BoundedPoset& bp, int condition);

struct AntitoneReport {
  std::array<PropertyReport, 5> conditions;
  /// Every x⁺ has a greatest (resp. least) element.
  bool greatest_all = false;
  bool least_all = false;
  /// (i)⟹(ii), (i)⟹(iii), (iv)⟹(ii), (v)⟹(iii), and the two
  /// extremum-conditioned implications (i)⟹(iv), (i)⟹(v). Only asserted on
  /// complemented posets; elsewhere reported vacuous.
  std::vector<PropertyReport> implications;
};
AntitoneReport antitone_conditions(const BoundedPoset& bp);

/// Generalized De Morgan laws:
///   1: (Min U(x,y))⁺ = Max L(x⁺,y⁺)
///   2: (Max L(x,y))⁺ = Min U(x⁺,y⁺)
IdentitySides de_morgan_sides(const BoundedPoset& bp, int law, Element x, Element y);
PropertyReport de_morgan_law(const BoundedPoset& bp, int law);
/// Both laws.
PropertyReport de_morgan_check(const BoundedPoset& bp);

/// On distributive posets every element has at most one complement, and a
/// total complementation is an antitone involution. Vacuous otherwise.
PropertyReport prop2_check(const BoundedPoset& bp);

/// Facts about x ↦ (x⁺)⁺ on complemented posets:
///   bi-plus-extensive:    a ∈ (a⁺)⁺ and ((a⁺)⁺)⁺ = a⁺
///   non-injective-breaks: not injective ⟹ some (x⁺)⁺ ≠ {x}
///   injective-descent:    injective and (a⁺)⁺ ≠ {a} ⟹ ∃ b ∈ (a⁺)⁺ with (b⁺)⁺ = {b}
std::vector<PropertyReport> bi_plus_properties(const BoundedPoset& bp);

}  // namespace posetkit

// Structure of involutive commutative two-valued groups: the Boolean
// subgroup V and its action, squares, special pairs, subgroups and
// quotients, homomorphisms, splitting off single-valued direct factors and
// branching sets of C2-extensions.

#ifndef TVG_STRUCTURE_HPP
#define TVG_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tvg/core.hpp"

namespace tvg {

// Sorted member list, always containing the identity.
using Subgroup = std::vector<ElementId>;

struct BooleanSubgroupData {
  std::vector<ElementId> members;  // e first, then order-2 elements ascending
  std::size_t dim = 0;
  // orbit_of[x] = id of the V-orbit of x; ids are assigned in order of the
  // smallest member, so orbit 0 is V itself.
  std::vector<std::size_t> orbit_of;
  std::vector<std::vector<ElementId>> orbits;
};

// True when x*x = [e, e], i.e. order(x) <= 2. Needs no power sequence.
bool is_strong_involution(const TwoValuedGroup& X, ElementId x);

// x^2 for an involutive group: the element of x*x other than e.
ElementId square(const TwoValuedGroup& X, ElementId x);

// Throws NotInvolutive unless X is involutive and commutative.
BooleanSubgroupData boolean_subgroup(const TwoValuedGroup& X);

// z when a*b = [z, z].
std::optional<ElementId> v_dot(const TwoValuedGroup& X, ElementId a, ElementId b);

struct SpecialityReport {
  bool special = false;
  std::vector<std::pair<ElementId, ElementId>> pairs;  // x <= y
};

SpecialityReport is_special(const TwoValuedGroup& X);

bool is_subgroup(const TwoValuedGroup& X, const std::vector<ElementId>& members);

// {x^2 : x in X}. Throws ClosureViolation when that set is not closed.
Subgroup squares_subgroup(const TwoValuedGroup& X);

Subgroup subgroup_closure(const TwoValuedGroup& X, const std::vector<ElementId>& generators);

struct Quotient {
  TwoValuedGroup group;
  // projection[x] = class of x; classes are indexed in order of their
  // smallest member and take that member's name.
  std::vector<ElementId> projection;
};

// X/Y. Throws NotInvolutiveCommutative for unsupported X and NotSubgroup
// when Y is not a subgroup or the induced product is not well defined.
Quotient quotient(const TwoValuedGroup& X, const std::vector<ElementId>& Y);

struct HomomorphismReport {
  bool is_homomorphism = false;
  Subgroup kernel;
  Subgroup image;
  // X/ker f -> im f via the induced map is a bijective homomorphism. Only
  // evaluated for homomorphisms out of an involutive commutative X.
  std::optional<bool> first_isomorphism_holds;
};

HomomorphismReport is_homomorphism(const TwoValuedGroup& X, const TwoValuedGroup& Z,
                                   const std::vector<ElementId>& f);

// True when f is a bijective homomorphism X -> Z.
bool is_isomorphism(const TwoValuedGroup& X, const TwoValuedGroup& Z,
                    const std::vector<ElementId>& f);

struct DirectFactorSplit {
  TwoValuedGroup factor;  // X', without single-valued direct factors
  std::size_t m = 0;
  // iso[x] = image of x in product_with_boolean(factor, m).
  std::vector<ElementId> iso;
};

// X = X' x C2^m. Splits one C2 at a time at the smallest non-square order-2
// element. Throws InconsistentSystem if a splitting homomorphism cannot be
// found or does not give an isomorphism.
DirectFactorSplit split_direct_factor(const TwoValuedGroup& X);

// True when every order-2 element is a square.
bool has_no_boolean_factor(const TwoValuedGroup& X);

struct BranchingData {
  TwoValuedGroup base;  // X^ / {e, u}
  std::vector<ElementId> projection;
  std::vector<ElementId> branching;      // R
  std::vector<ElementId> complement;     // V \ R, with e
  bool complement_is_subgroup = false;
};

// Throws NotOrderTwo unless u has order 2.
BranchingData branching_set(const TwoValuedGroup& Xhat, ElementId u);

}  // namespace tvg

#endif  // TVG_STRUCTURE_HPP

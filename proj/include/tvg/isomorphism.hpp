// Explicit isomorphism search and canonical forms for small two-valued
// groups. Neither needs involutivity.

#ifndef TVG_ISOMORPHISM_HPP
#define TVG_ISOMORPHISM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tvg/core.hpp"

namespace tvg {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Isomorphism-invariant element colors, refined until stable. Colors are
// ranks of sorted signatures, so they can be compared across groups only
// when computed jointly (see witness_isomorphism).
std::vector<std::size_t> refined_colors(const TwoValuedGroup& X);

// A bijection f with f(e) = e and f(x*y) = f(x)*f(y), or nullopt when none
// exists. Throws BudgetExceeded after `node_budget` search nodes.
std::optional<std::vector<ElementId>> witness_isomorphism(const TwoValuedGroup& X,
                                                          const TwoValuedGroup& Z,
                                                          std::uint64_t node_budget = kDefaultSearchBudget);

// perm with X.relabeled(perm) equal for all groups isomorphic to X: the
// lexicographically smallest table among relabelings that respect the
// refined colors. Throws BudgetExceeded when that set is too large.
std::vector<ElementId> canonical_permutation(const TwoValuedGroup& X,
                                             std::uint64_t budget = kDefaultSearchBudget);

// X.relabeled(canonical_permutation(X)) with generated names.
TwoValuedGroup canonical_form(const TwoValuedGroup& X, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace tvg

#endif  // TVG_ISOMORPHISM_HPP

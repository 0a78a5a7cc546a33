// Exhaustive search for commutative two-valued groups on k elements, up to
// isomorphism.

#ifndef TVG_ENUMERATE_HPP
#define TVG_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tvg/core.hpp"

namespace tvg {

enum class EnumerationMode {
  InvolutiveCommutative,
  Commutative,  // commutative, involutivity not required
};

// Search-node budget: TVG_SEARCH_BUDGET when set to a positive integer,
// otherwise 2e9.
std::uint64_t default_enumeration_budget();

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;  // complete tables that passed verify_axioms
};

// One representative per isomorphism class, in canonical form, sorted by
// table. Throws BudgetExceeded.
std::vector<TwoValuedGroup> enumerate_all(std::size_t k, EnumerationMode mode,
                                          std::uint64_t budget = default_enumeration_budget(),
                                          EnumerationStats* stats = nullptr);

}  // namespace tvg

#endif  // TVG_ENUMERATE_HPP

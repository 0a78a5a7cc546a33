// Builders for coset two-valued groups and the three series (principal,
// unipotent, special), plus products with Boolean groups and doubles.

#ifndef TVG_CONSTRUCTIONS_HPP
#define TVG_CONSTRUCTIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tvg/core.hpp"

namespace tvg {

// C_{d_1} x ... x C_{d_k} with elements encoded as mixed-radix indices, the
// last coordinate varying fastest. Index order is therefore lexicographic
// order on residue tuples and the zero tuple has index 0.
class FinAbelianGroup {
 public:
  // Empty factor list is the trivial group. Throws InvalidChain for d < 2
  // (factors of 1 are dropped silently).
  explicit FinAbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t size() const { return size_; }

  // True when d_1 | d_2 | ... | d_k.
  bool is_canonical() const;

  std::vector<int> decode(std::size_t index) const;
  std::size_t encode(const std::vector<int>& tuple) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;
  std::size_t order_of(std::size_t a) const;

  // "(1,0,3)"
  std::string tuple_name(std::size_t index) const;

 private:
  std::vector<int> factors_;
  std::size_t size_ = 1;
};

// Permutation of A's element indices; must be an automorphism with
// map∘map = id (checked by coset_group).
struct InvolutiveAutomorphism {
  std::vector<std::size_t> map;
};

InvolutiveAutomorphism antipodal_involution(const FinAbelianGroup& A);

// (a, b) -> (a, ab) on V x V for V = C_2^n, with A's coordinates ordered as
// (a_1..a_n, b_1..b_n).
InvolutiveAutomorphism unipotent_involution(std::size_t n);

// G/ι with π(g)*π(h) = [π(gh), π(gι(h))]. Orbits are ordered and named by their
// smallest representative. Throws NotAutomorphism / NotInvolutive.
TwoValuedGroup coset_group(const FinAbelianGroup& A, const InvolutiveAutomorphism& iota);

// Coset group together with the projection A -> X.
struct CosetProjection {
  TwoValuedGroup group;
  std::vector<ElementId> projection;
};
CosetProjection coset_group_with_projection(const FinAbelianGroup& A,
                                            const InvolutiveAutomorphism& iota);

// X^a_{d_1..d_k}. Requires every d_i >= 2 and d_1 | ... | d_k (InvalidChain).
TwoValuedGroup principal(const std::vector<int>& chain);

// X^u_n = (C_2^n x C_2^n)/ι_u, n >= 1.
TwoValuedGroup unipotent(std::size_t n);

// Y_n = C_2^n ∪ {s}; V in index order, then s last. n >= 1.
TwoValuedGroup special_series(std::size_t n);

// X x C_2^m with (x, w) at index x + |X| * w.
TwoValuedGroup product_with_boolean(const TwoValuedGroup& X, std::size_t m);

// x*y = [xy, xy].
TwoValuedGroup double_group(const FinAbelianGroup& A);

// Size formulas of the three series.
std::size_t principal_size(const std::vector<int>& chain);
std::size_t unipotent_size(std::size_t n);
std::size_t special_size(std::size_t n);

}  // namespace tvg

#endif  // TVG_CONSTRUCTIONS_HPP

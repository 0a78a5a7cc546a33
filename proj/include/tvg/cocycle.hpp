// Involutive symmetric quasi-cocycles V x V -> V on finite Boolean groups,
// read off from groups whose elements all have order 1, 2 or 4, and the
// F2-valued invariant separating the trivial class from the class of the
// basis cocycle.
//
// Elements of V = C2^n are bit masks; the group law is xor.

#ifndef TVG_COCYCLE_HPP
#define TVG_COCYCLE_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tvg/core.hpp"

namespace tvg {

using BoolVec = std::uint32_t;

// Smallest element of c + <gens>.
BoolVec reduce_mod_span(BoolVec c, std::initializer_list<BoolVec> gens);
bool in_span(BoolVec c, std::initializer_list<BoolVec> gens);

class QuasiCocycle {
 public:
  QuasiCocycle() = default;
  // `values` is row-major over 2^dim x 2^dim; entries are reduced modulo
  // <u, v> on construction.
  QuasiCocycle(std::size_t dim, std::vector<BoolVec> values);

  // The constant-e cocycle.
  static QuasiCocycle trivial(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return std::size_t{1} << dim_; }
  BoolVec operator()(BoolVec u, BoolVec v) const { return values_[u * order() + v]; }
  const std::vector<BoolVec>& values() const { return values_; }

  friend bool operator==(const QuasiCocycle&, const QuasiCocycle&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BoolVec> values_{0};
};

struct CocycleCheck {
  bool symmetric = true;
  bool involutive = true;
  bool normalized = true;
  bool cocycle = true;
  bool valid() const { return symmetric && involutive && normalized && cocycle; }
};

CocycleCheck check_quasicocycle(const QuasiCocycle& phi);
bool validate_quasicocycle(const QuasiCocycle& phi);

// phi_B(b_I, b_J) = b_{I ∩ J} for the standard basis: u & v.
QuasiCocycle phi_basis(std::size_t n);
// Same formula for an arbitrary basis of C2^n given as n masks.
QuasiCocycle phi_basis_in(const std::vector<BoolVec>& basis);

// Pointwise product.
QuasiCocycle multiply(const QuasiCocycle& a, const QuasiCocycle& b);

// phi(u,v) chi(u) chi(v) chi(uv); chi[0] must be 0.
QuasiCocycle perturb(const QuasiCocycle& phi, const std::vector<BoolVec>& chi);

// Transport along the automorphism M of V, given by the images of the
// standard basis vectors: (M.phi)(u, v) = M phi(M^-1 u, M^-1 v). Throws
// PreconditionViolated when M is singular.
QuasiCocycle change_basis(const QuasiCocycle& phi, const std::vector<BoolVec>& columns);

// Restriction to U = <basis[0..k)> along the projection killing
// basis[k..n); the result is written in the coordinates of basis[0..k).
// `basis` must be a basis of V.
QuasiCocycle restrict_to_subspace(const QuasiCocycle& phi, const std::vector<BoolVec>& basis,
                                  std::size_t k);

// 0 or 1. Throws InvalidCocycle for an invalid input.
int cohomology_invariant(const QuasiCocycle& phi);

struct CocycleExtraction {
  // V-basis chosen greedily in element order; bit i of a BoolVec is the
  // coefficient of basis[i].
  std::vector<ElementId> basis;
  std::vector<ElementId> v_element;       // mask -> element of V
  std::vector<ElementId> representative;  // mask v -> chosen x_v with x_v^2 = v
  QuasiCocycle phi;
};

// For X non-special, involutive and commutative, with orders in {1,2,4} and
// every order-2 element a square. Throws PreconditionViolated otherwise.
CocycleExtraction extract_quasicocycle(const TwoValuedGroup& X);

}  // namespace tvg

#endif  // TVG_COCYCLE_HPP

// Classification of finite involutive commutative two-valued groups into
// the principal, unipotent and special series.

#ifndef TVG_CLASSIFY_HPP
#define TVG_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tvg/core.hpp"

namespace tvg {

struct ClassLabel {
  enum class Kind { Principal, Unipotent, Special };

  Kind kind = Kind::Principal;
  std::vector<int> factors;  // Principal only
  std::size_t n = 0;         // Unipotent / Special
  std::size_t m = 0;         // Unipotent / Special: Boolean factor C2^m

  static ClassLabel principal(std::vector<int> factors) { return {Kind::Principal, std::move(factors), 0, 0}; }
  static ClassLabel unipotent(std::size_t n, std::size_t m) { return {Kind::Unipotent, {}, n, m}; }
  static ClassLabel special(std::size_t n, std::size_t m) { return {Kind::Special, {}, n, m}; }

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

// "Principal(2,4)", "Principal()", "Unipotent(3,0)", "Special(2,1)".
std::string to_string(const ClassLabel& label);
// Inverse of to_string; throws ParseError.
ClassLabel parse_label(const std::string& text);

// Invariant factors d_1 | ... | d_k of C_{f_1} x ... x C_{f_r}; 1s dropped.
std::vector<int> canonical_chain(const std::vector<int>& cyclic_factors);

// Applies the exceptional identifications: Unipotent(1,m), Unipotent(2,m)
// and Special(1,m) become principal; Principal factors become a chain.
ClassLabel canonical(const ClassLabel& label);

// Number of elements of the group named by the label.
std::size_t label_size(const ClassLabel& label);

// The group named by the label (principal factors need not form a chain).
TwoValuedGroup construct(const ClassLabel& label);

// All canonical labels of groups with exactly k elements, sorted.
std::vector<ClassLabel> canonical_labels_of_size(std::size_t k);

// A single-valued finite group given by its multiplication table.
struct AbelianTable {
  std::size_t size = 0;
  std::vector<std::size_t> mul;  // row-major size x size
  std::size_t identity = 0;

  std::size_t operator()(std::size_t a, std::size_t b) const { return mul[a * size + b]; }
};

struct Reconstruction {
  AbelianTable group;
  // Element i of the group is the pair (first[i], second[i]) with
  // second[i] in t * first[i].
  std::vector<ElementId> first;
  std::vector<ElementId> second;
  ElementId t = 0;
};

// Single-valued abelian A with A / antipodal = X. X must be non-special,
// involutive and commutative and t (default: the smallest element of order
// outside {1,2,4}) must have order outside {1,2,4}. Throws
// PreconditionViolated, NonUniquePair or NotAssociative.
Reconstruction reconstruct_abelian(const TwoValuedGroup& X, std::optional<ElementId> t = std::nullopt);

// Throws NotAbelian unless the table is a commutative group.
std::vector<int> invariant_factors(const AbelianTable& A);

// Throws NotInvolutiveCommutative for unsupported inputs.
ClassLabel classify(const TwoValuedGroup& X);

bool are_isomorphic(const TwoValuedGroup& X, const TwoValuedGroup& Z);

}  // namespace tvg

#endif  // TVG_CLASSIFY_HPP

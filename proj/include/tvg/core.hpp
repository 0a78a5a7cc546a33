// Finite two-valued groups stored as full product tables, the axiom checker
// and the power/order calculus of involutive groups.

#ifndef TVG_CORE_HPP
#define TVG_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tvg {

// Index of an element inside a TwoValuedGroup. The identity is always 0.
using ElementId = std::uint32_t;

inline constexpr ElementId kIdentity = 0;

// Unordered pair [lo, hi], stored sorted so that equality of values is
// multiset equality.
struct Pair {
  ElementId lo = 0;
  ElementId hi = 0;

  constexpr Pair() = default;
  constexpr Pair(ElementId a, ElementId b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  static constexpr Pair doubled(ElementId a) { return Pair(a, a); }

  constexpr bool is_doubled() const { return lo == hi; }
  constexpr bool contains(ElementId x) const { return lo == x || hi == x; }

  // The element left after removing one copy of `x`; x must be a member.
  constexpr ElementId other(ElementId x) const { return lo == x ? hi : lo; }

  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

// Sorted multiset of elements. Folding a k-element multiset with an element
// yields 2k elements.
using Multiset = std::vector<ElementId>;

Multiset make_multiset(std::vector<ElementId> elems);

class TwoValuedGroup {
 public:
  // `table` is row-major n*n. Throws IndexOutOfRange when an entry names a
  // nonexistent element and NonSquareTable when the size is not n*n.
  TwoValuedGroup(std::vector<std::string> names, std::vector<Pair> table);

  // Same as above with generated names "e", "g1", "g2", ...
  static TwoValuedGroup from_table(std::size_t n, std::vector<Pair> table);

  std::size_t size() const { return names_.size(); }
  ElementId identity() const { return kIdentity; }

  // Throws IndexOutOfRange.
  Pair product(ElementId a, ElementId b) const;
  // Unchecked variant for inner loops.
  Pair at(ElementId a, ElementId b) const { return table_[a * size() + b]; }

  const std::string& name(ElementId x) const;
  std::span<const std::string> names() const { return names_; }
  std::optional<ElementId> find(const std::string& name) const;
  std::span<const Pair> table() const { return table_; }

  // Table equality; element names are ignored.
  bool same_table(const TwoValuedGroup& other) const { return table_ == other.table_; }

  // Relabel: element x of *this becomes element perm[x] of the result.
  // perm[0] must be 0.
  TwoValuedGroup relabeled(std::span<const ElementId> perm) const;

 private:
  std::vector<std::string> names_;
  std::vector<Pair> table_;
};

Pair product(const TwoValuedGroup& X, ElementId a, ElementId b);

// Multiset union of x*b over x in m (right multiplication by b).
Multiset product_fold(const TwoValuedGroup& X, const Multiset& m, ElementId b);
// Multiset union of a*x over x in m (left multiplication by a).
Multiset product_fold(const TwoValuedGroup& X, ElementId a, const Multiset& m);

enum class Axiom {
  StrongIdentity,
  Associativity,
  InverseExistence,
  InverseUniqueness,
  Commutativity,
  Involutivity,
};

std::string to_string(Axiom a);

// Axiom-level entries (the first four tags) decide is_two_valued_group;
// Commutativity and Involutivity entries only clear the matching flag.
bool is_axiom_level(Axiom a);

struct Violation {
  Axiom axiom;
  std::vector<ElementId> witness;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool is_two_valued_group = true;
  bool is_commutative = true;
  bool is_involutive = true;
  // Sorted by (axiom, witness). At most `max_witnesses_per_axiom` entries of
  // each kind are kept; `violation_counts` holds the full totals.
  std::vector<Violation> violations;
  std::vector<std::size_t> violation_counts = std::vector<std::size_t>(6, 0);

  bool involutive_commutative_group() const {
    return is_two_valued_group && is_commutative && is_involutive;
  }
};

ValidationReport verify_axioms(const TwoValuedGroup& X, std::size_t max_witnesses_per_axiom = 16);

// Throws NotInvolutiveCommutative unless X passes verify_axioms as an
// involutive commutative two-valued group.
void require_involutive_commutative(const TwoValuedGroup& X);

// x^0, x^1, ..., x^(ord-1) from the recurrence x * x^k = [x^(k-1), x^(k+1)].
// Throws AmbiguousPower when a step has no consistent continuation (x^(k-1)
// missing from x*x^k, x*x^k != x^k*x) or the sequence never returns to e.
std::vector<ElementId> power_sequence(const TwoValuedGroup& X, ElementId x);

// x^k for any integer k, with x^(-k) = x^k.
ElementId power(const TwoValuedGroup& X, ElementId x, long long k);

std::size_t order(const TwoValuedGroup& X, ElementId x);

// Orders of all elements, indexed by ElementId.
std::vector<std::size_t> orders(const TwoValuedGroup& X);

}  // namespace tvg

#endif  // TVG_CORE_HPP

// The algebraic two-valued addition law
//   F(x,y,z) = (x + y + z - a2 xyz)^2 - 4 (1 + a3 xyz)(xy + xz + yz + a1 xyz)
// over C: symbolic expansion, the quadratic z -> roots of F(x,y,z) = 0,
// associativity checks on samples and the coefficients of the canonical
// invariant operator.

#ifndef TVG_FORMAL_HPP
#define TVG_FORMAL_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace tvg {

using cplx = std::complex<double>;

struct LawParams {
  cplx a1{0.0, 0.0};
  cplx a2{0.0, 0.0};
  cplx a3{0.0, 0.0};
};

// Sparse polynomial with complex coefficients in the six variables
// x, y, z, a1, a2, a3. Arithmetic on polynomials with integer coefficients
// is exact in double precision as long as coefficients stay below 2^53.
class Poly {
 public:
  enum Var { X = 0, Y, Z, A1, A2, A3, kNumVars };
  using Monomial = std::array<int, kNumVars>;

  Poly() = default;
  Poly(cplx c);  // NOLINT: constants convert implicitly
  static Poly var(Var v);

  const std::map<Monomial, cplx>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_in(Var v) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  Poly derivative(Var v) const;
  // Substitutes a constant for v.
  Poly substitute(Var v, cplx value) const;
  // Coefficient of v^k as a polynomial in the remaining variables.
  Poly coefficient(Var v, int k) const;
  // Renames variables: variable i becomes perm[i].
  Poly permuted(const std::array<Var, kNumVars>& perm) const;

  cplx evaluate(const std::array<cplx, kNumVars>& at) const;
  // Evaluates the parameters only.
  Poly specialize(const LawParams& p) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, cplx c);
  std::map<Monomial, cplx> terms_;
};

// F with symbolic a1, a2, a3.
const Poly& law_polynomial();

// Direct evaluation of the defining formula.
cplx eval_F(const LawParams& p, cplx x, cplx y, cplx z);

// F = A z^2 - B z + C as polynomials in x, y, a1, a2, a3.
struct ZCoefficientPolys {
  Poly A, B, C;
};
const ZCoefficientPolys& z_coefficient_polys();

struct ZCoefficients {
  cplx A, B, C;
};
ZCoefficients z_coefficients(const LawParams& p, cplx x, cplx y);

// Unordered pair of complex numbers.
struct ComplexPair {
  cplx first, second;
  // Equal up to swap within tol * (1 + |value|) per element.
  bool approx_equal(const ComplexPair& o, double tol) const;
};

inline constexpr double kDegeneracyTol = 1e-12;

// Roots of A z^2 - B z + C with the cancellation-free quadratic formula.
// Throws NearDegenerate when |A| <= kDegeneracyTol * max(|A|, |B|, |C|).
ComplexPair mul2(const LawParams& p, cplx x, cplx y);

struct AssociativityResult {
  bool ok = false;
  // Over the best of the 24 matchings: max |l - r| / (1 + max(|l|, |r|)).
  double max_error = 0.0;
};

inline constexpr double kAbsTol = 1e-9;

// Compares (x*y)*z with x*(y*z) as 4-element multisets; an element pair
// matches when |l - r| <= tol * (1 + max(|l|, |r|)) + kAbsTol. Propagates
// NearDegenerate.
AssociativityResult check_associativity(const LawParams& p, cplx x, cplx y, cplx z, double tol = 1e-6);

struct AssociativitySweep {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t degenerate = 0;  // draws rejected with NearDegenerate
  double max_error = 0.0;
  bool ok() const { return checked > 0 && passed == checked; }
};

// `samples` triples (x, y, z) drawn uniformly from the unit disk with a
// seeded mt19937_64; degenerate draws are redrawn (at most 100 per sample).
AssociativitySweep associativity_sweep(const LawParams& p, std::size_t samples, double tol,
                                       std::uint64_t seed);

// Uniform point of the closed unit disk.
template <class Rng>
cplx sample_unit_disk(Rng& rng);

// phi1(x) and phi2(x) as polynomials in x, a1, a2, a3, obtained from
// Theta1 = B/A, Theta2 = C/A and sigma = Theta1^2 - 4 Theta2 by exact
// differentiation in y at y = 0 (where A = 1).
struct CanonicalOperatorPolys {
  Poly phi1, phi2;
};
const CanonicalOperatorPolys& canonical_operator_polys();

std::pair<cplx, cplx> canonical_operator_coeffs(const LawParams& p, cplx x);

template <class Rng>
cplx sample_unit_disk(Rng& rng) {
  // Draw by hand rather than through <random> distributions so the stream is
  // identical across standard libraries.
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  const double r = std::sqrt(static_cast<double>(rng() >> 11) * kScale);
  const double theta = 2.0 * 3.14159265358979323846 * static_cast<double>(rng() >> 11) * kScale;
  return std::polar(r, theta);
}

}  // namespace tvg

#endif  // TVG_FORMAL_HPP

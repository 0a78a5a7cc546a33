#include "tvg/formal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "tvg/errors.hpp"

namespace tvg {

Poly::Poly(cplx c) {
  if (c != cplx(0.0)) terms_[Monomial{}] = c;
}

Poly Poly::var(Var v) {
  Poly p;
  Monomial m{};
  m[v] = 1;
  p.terms_[m] = 1.0;
  return p;
}

void Poly::add_term(const Monomial& m, cplx c) {
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second == cplx(0.0)) terms_.erase(it);
}

int Poly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Monomial m;
      for (int i = 0; i < Poly::kNumVars; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::derivative(Var v) const {
  Poly r;
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    if (m[v] == 0) continue;
    const double k = m[v];
    --m[v];
    r.add_term(m, c * k);
  }
  return r;
}

Poly Poly::substitute(Var v, cplx value) const {
  Poly r;
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    const int k = m[v];
    m[v] = 0;
    cplx f = 1.0;
    for (int i = 0; i < k; ++i) f *= value;
    r.add_term(m, c * f);
  }
  return r;
}

Poly Poly::coefficient(Var v, int k) const {
  Poly r;
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    if (m[v] != k) continue;
    m[v] = 0;
    r.add_term(m, c);
  }
  return r;
}

Poly Poly::permuted(const std::array<Var, kNumVars>& perm) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Monomial out{};
    for (int i = 0; i < kNumVars; ++i) out[perm[i]] += m[i];
    r.add_term(out, c);
  }
  return r;
}

cplx Poly::evaluate(const std::array<cplx, kNumVars>& at) const {
  cplx sum = 0.0;
  for (const auto& [m, c] : terms_) {
    cplx t = c;
    for (int i = 0; i < kNumVars; ++i) {
      for (int k = 0; k < m[i]; ++k) t *= at[i];
    }
    sum += t;
  }
  return sum;
}

Poly Poly::specialize(const LawParams& p) const {
  return substitute(A1, p.a1).substitute(A2, p.a2).substitute(A3, p.a3);
}

std::string Poly::to_string() const {
  static const char* names[kNumVars] = {"x", "y", "z", "a1", "a2", "a3"};
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    os << ")";
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      os << "*" << names[i];
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

const Poly& law_polynomial() {
  static const Poly F = [] {
    const Poly x = Poly::var(Poly::X), y = Poly::var(Poly::Y), z = Poly::var(Poly::Z);
    const Poly a1 = Poly::var(Poly::A1), a2 = Poly::var(Poly::A2), a3 = Poly::var(Poly::A3);
    const Poly xyz = x * y * z;
    const Poly lin = x + y + z - a2 * xyz;
    return lin * lin - Poly(4.0) * (Poly(1.0) + a3 * xyz) * (x * y + x * z + y * z + a1 * xyz);
  }();
  return F;
}

cplx eval_F(const LawParams& p, cplx x, cplx y, cplx z) {
  const cplx xyz = x * y * z;
  const cplx lin = x + y + z - p.a2 * xyz;
  return lin * lin - 4.0 * (1.0 + p.a3 * xyz) * (x * y + x * z + y * z + p.a1 * xyz);
}

const ZCoefficientPolys& z_coefficient_polys() {
  static const ZCoefficientPolys polys = [] {
    const Poly& F = law_polynomial();
    return ZCoefficientPolys{F.coefficient(Poly::Z, 2), -F.coefficient(Poly::Z, 1),
                             F.coefficient(Poly::Z, 0)};
  }();
  return polys;
}

ZCoefficients z_coefficients(const LawParams& p, cplx x, cplx y) {
  const auto& c = z_coefficient_polys();
  const std::array<cplx, Poly::kNumVars> at{x, y, 0.0, p.a1, p.a2, p.a3};
  return {c.A.evaluate(at), c.B.evaluate(at), c.C.evaluate(at)};
}

bool ComplexPair::approx_equal(const ComplexPair& o, double tol) const {
  auto close = [tol](cplx a, cplx b) { return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b))); };
  return (close(first, o.first) && close(second, o.second)) ||
         (close(first, o.second) && close(second, o.first));
}

ComplexPair mul2(const LawParams& p, cplx x, cplx y) {
  const ZCoefficients k = z_coefficients(p, x, y);
  const double scale = std::max({std::abs(k.A), std::abs(k.B), std::abs(k.C)});
  if (std::abs(k.A) <= kDegeneracyTol * scale || scale == 0.0) {
    std::ostringstream os;
    os << "leading coefficient " << std::abs(k.A) << " vanishes at x=" << x << ", y=" << y;
    throw NearDegenerate(os.str());
  }
  // A z^2 + b z + C with b = -B; pick the sign that avoids cancellation in
  // q = -(b + sign * sqrt(disc)) / 2, then z = q / A and z = C / q.
  const cplx b = -k.B;
  cplx root = std::sqrt(b * b - 4.0 * k.A * k.C);
  if ((std::conj(b) * root).real() < 0.0) root = -root;
  const cplx q = -0.5 * (b + root);
  if (q == cplx(0.0)) return {0.0, 0.0};  // b = 0 and C = 0
  return {q / k.A, k.C / q};
}

AssociativityResult check_associativity(const LawParams& p, cplx x, cplx y, cplx z, double tol) {
  const ComplexPair xy = mul2(p, x, y);
  const ComplexPair yz = mul2(p, y, z);
  const ComplexPair l1 = mul2(p, xy.first, z), l2 = mul2(p, xy.second, z);
  const ComplexPair r1 = mul2(p, x, yz.first), r2 = mul2(p, x, yz.second);
  const std::array<cplx, 4> left{l1.first, l1.second, l2.first, l2.second};
  const std::array<cplx, 4> right{r1.first, r1.second, r2.first, r2.second};

  AssociativityResult res;
  res.max_error = INFINITY;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      const cplx l = left[i], r = right[perm[i]];
      const double mag = std::max(std::abs(l), std::abs(r));
      const double d = std::abs(l - r);
      worst = std::max(worst, d / (1.0 + mag));
      if (d > tol * (1.0 + mag) + kAbsTol) ok = false;
    }
    res.ok = res.ok || ok;
    res.max_error = std::min(res.max_error, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

AssociativitySweep associativity_sweep(const LawParams& p, std::size_t samples, double tol,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AssociativitySweep sweep;
  for (std::size_t i = 0; i < samples; ++i) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      const cplx x = sample_unit_disk(rng), y = sample_unit_disk(rng), z = sample_unit_disk(rng);
      try {
        const AssociativityResult r = check_associativity(p, x, y, z, tol);
        ++sweep.checked;
        sweep.passed += r.ok;
        sweep.max_error = std::max(sweep.max_error, r.max_error);
        break;
      } catch (const NearDegenerate&) {
        ++sweep.degenerate;
      }
    }
  }
  return sweep;
}

const CanonicalOperatorPolys& canonical_operator_polys() {
  static const CanonicalOperatorPolys polys = [] {
    const auto& [A, B, C] = z_coefficient_polys();
    const Poly A0 = A.substitute(Poly::Y, 0.0);
    if (!(A0 == Poly(1.0))) throw NearDegenerate("A(x, 0) is not identically 1: " + A0.to_string());
    const Poly Ay = A.derivative(Poly::Y).substitute(Poly::Y, 0.0);
    const Poly B0 = B.substitute(Poly::Y, 0.0);
    const Poly By = B.derivative(Poly::Y).substitute(Poly::Y, 0.0);
    const Poly C0 = C.substitute(Poly::Y, 0.0);
    const Poly Cy = C.derivative(Poly::Y).substitute(Poly::Y, 0.0);
    // Quotient rule with A(x,0) = 1.
    const Poly theta1_y = By - B0 * Ay;
    const Poly theta2_y = Cy - C0 * Ay;
    const Poly sigma_y = Poly(2.0) * B0 * theta1_y - Poly(4.0) * theta2_y;
    return CanonicalOperatorPolys{theta1_y, sigma_y};
  }();
  return polys;
}

std::pair<cplx, cplx> canonical_operator_coeffs(const LawParams& p, cplx x) {
  const auto& polys = canonical_operator_polys();
  const std::array<cplx, Poly::kNumVars> at{x, 0.0, 0.0, p.a1, p.a2, p.a3};
  return {polys.phi1.evaluate(at), polys.phi2.evaluate(at)};
}

}  // namespace tvg

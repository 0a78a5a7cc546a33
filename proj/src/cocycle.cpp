#include "tvg/cocycle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tvg/errors.hpp"
#include "tvg/structure.hpp"

namespace tvg {

BoolVec reduce_mod_span(BoolVec c, std::initializer_list<BoolVec> gens) {
  // Echelonize by leading bit, then clear leading bits greedily; the result
  // is the minimum of the coset.
  std::vector<BoolVec> basis;
  for (BoolVec g : gens) {
    for (BoolVec b : basis) g = std::min(g, g ^ b);
    if (g != 0) {
      basis.push_back(g);
      std::sort(basis.begin(), basis.end(), std::greater<>());
    }
  }
  for (BoolVec b : basis) c = std::min(c, c ^ b);
  return c;
}

bool in_span(BoolVec c, std::initializer_list<BoolVec> gens) { return reduce_mod_span(c, gens) == 0; }

QuasiCocycle::QuasiCocycle(std::size_t dim, std::vector<BoolVec> values)
    : dim_(dim), values_(std::move(values)) {
  const std::size_t q = order();
  if (values_.size() != q * q) {
    throw InvalidCocycle("cocycle table has " + std::to_string(values_.size()) + " entries, expected " +
                         std::to_string(q * q));
  }
  for (BoolVec u = 0; u < q; ++u) {
    for (BoolVec v = 0; v < q; ++v) {
      BoolVec& c = values_[u * q + v];
      if (c >= q) throw InvalidCocycle("cocycle value outside V");
      c = reduce_mod_span(c, {u, v});
    }
  }
}

QuasiCocycle QuasiCocycle::trivial(std::size_t dim) {
  const std::size_t q = std::size_t{1} << dim;
  return QuasiCocycle(dim, std::vector<BoolVec>(q * q, 0));
}

CocycleCheck check_quasicocycle(const QuasiCocycle& phi) {
  CocycleCheck r;
  const auto q = static_cast<BoolVec>(phi.order());
  for (BoolVec u = 0; u < q; ++u) {
    if (phi(u, u) != 0) r.involutive = false;
    if (phi(0, u) != 0 || phi(u, 0) != 0) r.normalized = false;
    for (BoolVec v = 0; v < q; ++v) {
      // Stored values are already reduced modulo <u, v> = <v, u>.
      if (phi(u, v) != phi(v, u)) r.symmetric = false;
      for (BoolVec w = 0; w < q && r.cocycle; ++w) {
        const BoolVec c = phi(u, v) ^ phi(u ^ v, w) ^ phi(u, v ^ w) ^ phi(v, w);
        if (!in_span(c, {u, v, w})) r.cocycle = false;
      }
    }
  }
  return r;
}

bool validate_quasicocycle(const QuasiCocycle& phi) { return check_quasicocycle(phi).valid(); }

QuasiCocycle phi_basis(std::size_t n) {
  const std::size_t q = std::size_t{1} << n;
  std::vector<BoolVec> values(q * q);
  for (BoolVec u = 0; u < q; ++u) {
    for (BoolVec v = 0; v < q; ++v) values[u * q + v] = u & v;
  }
  return QuasiCocycle(n, std::move(values));
}

namespace {

BoolVec apply(const std::vector<BoolVec>& columns, BoolVec x) {
  BoolVec y = 0;
  for (std::size_t i = 0; x != 0; ++i, x >>= 1) {
    if (x & 1U) y ^= columns[i];
  }
  return y;
}

// Table of M^-1 for the linear map with the given columns.
std::vector<BoolVec> inverse_table(const std::vector<BoolVec>& columns, std::size_t n) {
  const std::size_t q = std::size_t{1} << n;
  if (columns.size() != n) throw PreconditionViolated("basis has the wrong number of vectors");
  std::vector<BoolVec> inv(q, static_cast<BoolVec>(q));
  for (BoolVec x = 0; x < q; ++x) {
    const BoolVec y = apply(columns, x);
    if (y >= q || inv[y] != q) throw PreconditionViolated("basis vectors are not independent");
    inv[y] = x;
  }
  return inv;
}

}  // namespace

QuasiCocycle phi_basis_in(const std::vector<BoolVec>& basis) {
  const std::size_t n = basis.size();
  const std::size_t q = std::size_t{1} << n;
  const std::vector<BoolVec> coords = inverse_table(basis, n);
  std::vector<BoolVec> values(q * q);
  for (BoolVec u = 0; u < q; ++u) {
    for (BoolVec v = 0; v < q; ++v) values[u * q + v] = apply(basis, coords[u] & coords[v]);
  }
  return QuasiCocycle(n, std::move(values));
}

QuasiCocycle multiply(const QuasiCocycle& a, const QuasiCocycle& b) {
  if (a.dim() != b.dim()) throw PreconditionViolated("cocycles live on different groups");
  std::vector<BoolVec> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a.values()[i] ^ b.values()[i];
  return QuasiCocycle(a.dim(), std::move(values));
}

QuasiCocycle perturb(const QuasiCocycle& phi, const std::vector<BoolVec>& chi) {
  const std::size_t q = phi.order();
  if (chi.size() != q || chi[0] != 0) throw PreconditionViolated("chi must be a map V -> V with chi(e) = e");
  std::vector<BoolVec> values(q * q);
  for (BoolVec u = 0; u < q; ++u) {
    for (BoolVec v = 0; v < q; ++v) values[u * q + v] = phi(u, v) ^ chi[u] ^ chi[v] ^ chi[u ^ v];
  }
  return QuasiCocycle(phi.dim(), std::move(values));
}

QuasiCocycle change_basis(const QuasiCocycle& phi, const std::vector<BoolVec>& columns) {
  const std::size_t q = phi.order();
  const std::vector<BoolVec> inv = inverse_table(columns, phi.dim());
  std::vector<BoolVec> values(q * q);
  for (BoolVec u = 0; u < q; ++u) {
    for (BoolVec v = 0; v < q; ++v) values[u * q + v] = apply(columns, phi(inv[u], inv[v]));
  }
  return QuasiCocycle(phi.dim(), std::move(values));
}

QuasiCocycle restrict_to_subspace(const QuasiCocycle& phi, const std::vector<BoolVec>& basis,
                                  std::size_t k) {
  if (k > basis.size()) throw PreconditionViolated("subspace larger than the group");
  const std::vector<BoolVec> coords = inverse_table(basis, phi.dim());
  const std::size_t qk = std::size_t{1} << k;
  const auto mask = static_cast<BoolVec>(qk - 1);
  std::vector<BoolVec> values(qk * qk);
  for (BoolVec a = 0; a < qk; ++a) {
    for (BoolVec b = 0; b < qk; ++b) {
      values[a * qk + b] = coords[phi(apply(basis, a), apply(basis, b))] & mask;
    }
  }
  return QuasiCocycle(k, std::move(values));
}

int cohomology_invariant(const QuasiCocycle& phi) {
  const CocycleCheck chk = check_quasicocycle(phi);
  if (!chk.valid()) {
    std::string why;
    if (!chk.symmetric) why += " asymmetric";
    if (!chk.involutive) why += " non-involutive";
    if (!chk.normalized) why += " unnormalized";
    if (!chk.cocycle) why += " cocycle-inclusion";
    throw InvalidCocycle("not an involutive symmetric quasi-cocycle:" + why);
  }
  if (phi.dim() <= 2) return 0;
  if (phi.dim() > 3) {
    std::vector<BoolVec> standard;
    for (std::size_t i = 0; i < phi.dim(); ++i) standard.push_back(BoolVec{1} << i);
    return cohomology_invariant(restrict_to_subspace(phi, standard, 3));
  }
  // dim 3: each nonzero functional xi has a 2-dimensional kernel <u, v>;
  // lambda(xi) records whether phi(u, v) leaves it.
  int sigma = 0;
  for (BoolVec xi = 1; xi < 8; ++xi) {
    std::vector<BoolVec> kernel;
    for (BoolVec u = 1; u < 8; ++u) {
      if (std::popcount(u & xi) % 2 == 0) kernel.push_back(u);
    }
    const BoolVec u = kernel[0], v = kernel[1];
    if (!in_span(phi(u, v), {u, v})) sigma ^= 1;
  }
  return sigma;
}

CocycleExtraction extract_quasicocycle(const TwoValuedGroup& X) {
  try {
    require_involutive_commutative(X);
  } catch (const NotInvolutiveCommutative& e) {
    throw PreconditionViolated(e.what());
  }
  if (is_special(X).special) throw PreconditionViolated("group is special");
  const auto n = static_cast<ElementId>(X.size());
  for (ElementId x = 0; x < n; ++x) {
    if (!is_strong_involution(X, square(X, x))) {
      throw PreconditionViolated("element " + X.name(x) + " has order outside {1, 2, 4}");
    }
  }
  if (!has_no_boolean_factor(X)) throw PreconditionViolated("group has a single-valued direct factor");

  const BooleanSubgroupData V = boolean_subgroup(X);
  CocycleExtraction out;
  // Greedy basis: admit each member of V not yet spanned.
  std::vector<ElementId> span{kIdentity};
  std::vector<bool> spanned(n, false);
  spanned[kIdentity] = true;
  for (ElementId v : V.members) {
    if (spanned[v]) continue;
    out.basis.push_back(v);
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) {
      const ElementId w = *v_dot(X, v, span[i]);
      span.push_back(w);
      spanned[w] = true;
    }
  }
  const std::size_t dim = out.basis.size();
  const std::size_t q = std::size_t{1} << dim;
  // mask -> element, with bit i standing for basis[i].
  out.v_element.assign(q, kIdentity);
  std::vector<BoolVec> mask_of(n, static_cast<BoolVec>(q));
  mask_of[kIdentity] = 0;
  for (BoolVec m = 1; m < q; ++m) {
    const int i = std::countr_zero(m);
    out.v_element[m] = *v_dot(X, out.basis[i], out.v_element[m & (m - 1)]);
    mask_of[out.v_element[m]] = m;
  }

  out.representative.assign(q, static_cast<ElementId>(n));
  out.representative[0] = kIdentity;
  for (ElementId x = 0; x < n; ++x) {
    const BoolVec m = mask_of[square(X, x)];
    if (m != 0 && out.representative[m] == n) out.representative[m] = x;
  }
  for (BoolVec m = 1; m < q; ++m) {
    if (out.representative[m] == n) throw PreconditionViolated("some order-2 element is not a square");
  }

  std::vector<BoolVec> values(q * q);
  for (BoolVec u = 0; u < q; ++u) {
    for (BoolVec v = 0; v < q; ++v) {
      const Pair p = X.at(out.representative[u], out.representative[v]);
      const ElementId target = out.representative[u ^ v];
      bool found = false;
      for (BoolVec c = 0; c < q && !found; ++c) {
        const auto z1 = v_dot(X, out.v_element[c], target);
        if (!z1 || !p.contains(*z1)) continue;
        const auto z2 = v_dot(X, out.v_element[u ^ c], target);
        if (!z2 || Pair(*z1, *z2) != p) continue;
        values[u * q + v] = c;
        found = true;
      }
      if (!found) {
        throw PreconditionViolated("product of representatives is not a V-translate of the "
                                   "representative of the product");
      }
    }
  }
  out.phi = QuasiCocycle(dim, std::move(values));
  return out;
}

}  // namespace tvg

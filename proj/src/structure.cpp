#include "tvg/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "tvg/constructions.hpp"
#include "tvg/errors.hpp"
#include "tvg/f2.hpp"

namespace tvg {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller index as root so roots are class minima.
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

void require_involutive_and_commutative_cheap(const TwoValuedGroup& X) {
  const auto n = static_cast<ElementId>(X.size());
  for (ElementId x = 0; x < n; ++x) {
    if (!X.at(x, x).contains(kIdentity)) {
      throw NotInvolutive("element " + X.name(x) + " is not its own inverse");
    }
    for (ElementId y = x + 1; y < n; ++y) {
      if (X.at(x, y) != X.at(y, x)) {
        throw NotInvolutive("product of " + X.name(x) + " and " + X.name(y) + " is not commutative");
      }
    }
  }
}

std::vector<bool> membership(std::size_t n, const std::vector<ElementId>& members) {
  std::vector<bool> in(n, false);
  for (ElementId y : members) {
    if (y >= n) throw IndexOutOfRange("element " + std::to_string(y) + " out of range");
    in[y] = true;
  }
  return in;
}

}  // namespace

bool is_strong_involution(const TwoValuedGroup& X, ElementId x) {
  return X.product(x, x) == Pair::doubled(kIdentity);
}

ElementId square(const TwoValuedGroup& X, ElementId x) {
  const Pair p = X.product(x, x);
  if (!p.contains(kIdentity)) throw NotInvolutive("element " + X.name(x) + " is not its own inverse");
  return p.other(kIdentity);
}

std::optional<ElementId> v_dot(const TwoValuedGroup& X, ElementId a, ElementId b) {
  const Pair p = X.product(a, b);
  if (!p.is_doubled()) return std::nullopt;
  return p.lo;
}

BooleanSubgroupData boolean_subgroup(const TwoValuedGroup& X) {
  require_involutive_and_commutative_cheap(X);
  const auto n = static_cast<ElementId>(X.size());
  BooleanSubgroupData d;
  for (ElementId x = 0; x < n; ++x) {
    if (is_strong_involution(X, x)) d.members.push_back(x);
  }
  const std::vector<bool> inV = membership(n, d.members);
  std::size_t size = d.members.size();
  while (size > 1) {
    if (size % 2 != 0) throw ClosureViolation("order <= 2 elements do not form a Boolean group");
    size /= 2;
    ++d.dim;
  }

  UnionFind uf(n);
  for (ElementId v : d.members) {
    for (ElementId x = 0; x < n; ++x) {
      const auto z = v_dot(X, v, x);
      if (!z) {
        throw ClosureViolation("order-2 element " + X.name(v) + " does not act on " + X.name(x));
      }
      if (inV[x] && !inV[*z]) throw ClosureViolation("order <= 2 elements are not closed");
      uf.unite(x, *z);
    }
  }
  d.orbit_of.assign(n, 0);
  std::vector<std::size_t> id_of_root(n, static_cast<std::size_t>(-1));
  for (ElementId x = 0; x < n; ++x) {
    const std::size_t r = uf.find(x);
    if (id_of_root[r] == static_cast<std::size_t>(-1)) {
      id_of_root[r] = d.orbits.size();
      d.orbits.emplace_back();
    }
    d.orbit_of[x] = id_of_root[r];
    d.orbits[id_of_root[r]].push_back(x);
  }
  return d;
}

SpecialityReport is_special(const TwoValuedGroup& X) {
  const auto n = static_cast<ElementId>(X.size());
  std::vector<bool> big(n);
  for (ElementId x = 0; x < n; ++x) big[x] = !is_strong_involution(X, x);
  SpecialityReport r;
  for (ElementId x = 0; x < n; ++x) {
    if (!big[x]) continue;
    for (ElementId y = x; y < n; ++y) {
      if (big[y] && X.at(x, y).is_doubled()) r.pairs.emplace_back(x, y);
    }
  }
  r.special = !r.pairs.empty();
  return r;
}

bool is_subgroup(const TwoValuedGroup& X, const std::vector<ElementId>& members) {
  const std::vector<bool> in = membership(X.size(), members);
  if (!in[kIdentity]) return false;
  for (ElementId a : members) {
    for (ElementId b : members) {
      const Pair p = X.at(a, b);
      if (!in[p.lo] || !in[p.hi]) return false;
    }
  }
  return true;
}

Subgroup squares_subgroup(const TwoValuedGroup& X) {
  std::set<ElementId> q;
  for (ElementId x = 0; x < X.size(); ++x) q.insert(square(X, x));
  Subgroup out(q.begin(), q.end());
  if (!is_subgroup(X, out)) throw ClosureViolation("squares do not form a subgroup");
  return out;
}

Subgroup subgroup_closure(const TwoValuedGroup& X, const std::vector<ElementId>& generators) {
  std::vector<bool> in(X.size(), false);
  std::vector<ElementId> members{kIdentity};
  in[kIdentity] = true;
  for (ElementId g : generators) {
    if (g >= X.size()) throw IndexOutOfRange("element " + std::to_string(g) + " out of range");
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  }
  // Each newly admitted element is multiplied against everything admitted
  // before it, so every pair is visited once.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Pair p = X.at(members[i], members[j]);
      for (ElementId z : {p.lo, p.hi}) {
        if (!in[z]) {
          in[z] = true;
          members.push_back(z);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Quotient quotient(const TwoValuedGroup& X, const std::vector<ElementId>& subgroup) {
  require_involutive_commutative(X);
  std::vector<ElementId> Y = subgroup;
  std::sort(Y.begin(), Y.end());
  Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
  if (!is_subgroup(X, Y)) throw NotSubgroup("the given set is not a subgroup");
  const auto n = static_cast<ElementId>(X.size());

  UnionFind uf(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y : Y) {
      const Pair p = X.at(x, y);
      uf.unite(x, p.lo);
      uf.unite(x, p.hi);
    }
  }
  std::vector<ElementId> proj(n);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < n; ++x) {
    const std::size_t r = uf.find(x);
    if (r == x) {
      proj[x] = static_cast<ElementId>(reps.size());
      reps.push_back(x);
    } else {
      proj[x] = proj[r];
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    const bool in_y = std::binary_search(Y.begin(), Y.end(), x);
    if ((proj[x] == 0) != in_y) throw NotSubgroup("class of the identity differs from the subgroup");
  }

  const std::size_t k = reps.size();
  std::vector<Pair> table(k * k);
  std::vector<std::string> names;
  for (ElementId r : reps) names.push_back(X.name(r));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Pair p = X.at(reps[i], reps[j]);
      table[i * k + j] = Pair(proj[p.lo], proj[p.hi]);
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const Pair p = X.at(a, b);
      if (Pair(proj[p.lo], proj[p.hi]) != table[proj[a] * k + proj[b]]) {
        throw NotSubgroup("induced product is not well defined at " + X.name(a) + ", " + X.name(b));
      }
    }
  }
  return {TwoValuedGroup(std::move(names), std::move(table)), std::move(proj)};
}

HomomorphismReport is_homomorphism(const TwoValuedGroup& X, const TwoValuedGroup& Z,
                                   const std::vector<ElementId>& f) {
  HomomorphismReport rep;
  const auto n = static_cast<ElementId>(X.size());
  if (f.size() != n) return rep;
  for (ElementId t : f) {
    if (t >= Z.size()) return rep;
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const Pair p = X.at(a, b);
      if (Pair(f[p.lo], f[p.hi]) != Z.at(f[a], f[b])) return rep;
    }
  }
  rep.is_homomorphism = true;
  std::set<ElementId> image;
  for (ElementId x = 0; x < n; ++x) {
    if (f[x] == kIdentity) rep.kernel.push_back(x);
    image.insert(f[x]);
  }
  rep.image.assign(image.begin(), image.end());

  if (!verify_axioms(X, 1).involutive_commutative_group()) return rep;
  if (!is_subgroup(X, rep.kernel) || !is_subgroup(Z, rep.image)) {
    rep.first_isomorphism_holds = false;
    return rep;
  }
  const Quotient q = quotient(X, rep.kernel);
  const std::size_t k = q.group.size();
  // Induced map on classes; must be well defined, injective and onto im f.
  std::vector<ElementId> induced(k, static_cast<ElementId>(Z.size()));
  bool ok = true;
  for (ElementId x = 0; x < n; ++x) {
    ElementId& slot = induced[q.projection[x]];
    if (slot == Z.size()) {
      slot = f[x];
    } else if (slot != f[x]) {
      ok = false;
    }
  }
  std::vector<ElementId> sorted = induced;
  std::sort(sorted.begin(), sorted.end());
  ok = ok && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted == rep.image;
  for (ElementId a = 0; ok && a < k; ++a) {
    for (ElementId b = 0; ok && b < k; ++b) {
      const Pair p = q.group.at(a, b);
      ok = Pair(induced[p.lo], induced[p.hi]) == Z.at(induced[a], induced[b]);
    }
  }
  rep.first_isomorphism_holds = ok;
  return rep;
}

bool is_isomorphism(const TwoValuedGroup& X, const TwoValuedGroup& Z,
                    const std::vector<ElementId>& f) {
  if (X.size() != Z.size() || f.size() != X.size()) return false;
  std::vector<bool> hit(Z.size(), false);
  for (ElementId t : f) {
    if (t >= Z.size() || hit[t]) return false;
    hit[t] = true;
  }
  const auto n = static_cast<ElementId>(X.size());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const Pair p = X.at(a, b);
      if (Pair(f[p.lo], f[p.hi]) != Z.at(f[a], f[b])) return false;
    }
  }
  return true;
}

namespace {

// Smallest order-2 element that is not a square, if any.
std::optional<ElementId> non_square_involution(const TwoValuedGroup& X) {
  std::vector<bool> is_sq(X.size(), false);
  for (ElementId x = 0; x < X.size(); ++x) is_sq[square(X, x)] = true;
  for (ElementId x = 1; x < X.size(); ++x) {
    if (is_strong_involution(X, x) && !is_sq[x]) return x;
  }
  return std::nullopt;
}

// Homomorphism f: X -> C2 with f(w) = 1, from f(x)+f(y)+f(z) = 0 for z in x*y.
std::vector<bool> splitting_homomorphism(const TwoValuedGroup& X, ElementId w) {
  const auto n = static_cast<ElementId>(X.size());
  F2LinearSystem sys(n);
  std::set<std::array<ElementId, 3>> seen;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x; y < n; ++y) {
      const Pair p = X.at(x, y);
      for (ElementId z : {p.lo, p.hi}) {
        std::array<ElementId, 3> t{x, y, z};
        std::sort(t.begin(), t.end());
        if (!seen.insert(t).second) continue;
        BitVector row(n);
        for (ElementId v : t) row.flip(v);
        if (row.none()) continue;
        sys.add_equation(std::move(row), false);
      }
    }
  }
  BitVector pin(n);
  pin.set(w);
  if (!sys.add_equation(std::move(pin), true)) {
    throw InconsistentSystem("no homomorphism onto C2 separates " + X.name(w));
  }
  const auto sol = sys.solve();
  if (!sol) throw InconsistentSystem("splitting system has no solution");
  std::vector<bool> f(n);
  for (ElementId x = 0; x < n; ++x) f[x] = sol->get(x);
  return f;
}

}  // namespace

bool has_no_boolean_factor(const TwoValuedGroup& X) { return !non_square_involution(X).has_value(); }

DirectFactorSplit split_direct_factor(const TwoValuedGroup& X) {
  require_involutive_commutative(X);
  TwoValuedGroup G = X;
  std::size_t m = 0;
  // (element of G, Boolean bits) for each element of X.
  std::vector<ElementId> g_of(X.size());
  std::vector<std::size_t> bits_of(X.size(), 0);
  std::iota(g_of.begin(), g_of.end(), 0);

  while (const auto w = non_square_involution(G)) {
    const std::vector<bool> f = splitting_homomorphism(G, *w);
    Quotient q = quotient(G, {kIdentity, *w});
    for (std::size_t x = 0; x < X.size(); ++x) {
      const ElementId g = g_of[x];
      if (f[g]) bits_of[x] |= std::size_t{1} << m;
      g_of[x] = q.projection[g];
    }
    G = std::move(q.group);
    ++m;
  }

  DirectFactorSplit out{G, m, std::vector<ElementId>(X.size())};
  for (std::size_t x = 0; x < X.size(); ++x) {
    out.iso[x] = static_cast<ElementId>(g_of[x] + G.size() * bits_of[x]);
  }
  if (m > 0 && !is_isomorphism(X, product_with_boolean(G, m), out.iso)) {
    throw InconsistentSystem("split map is not an isomorphism");
  }
  return out;
}

BranchingData branching_set(const TwoValuedGroup& Xhat, ElementId u) {
  if (u >= Xhat.size() || u == kIdentity || !is_strong_involution(Xhat, u)) {
    throw NotOrderTwo("element " + std::to_string(u) + " does not have order 2");
  }
  Quotient q = quotient(Xhat, {kIdentity, u});
  const TwoValuedGroup& X = q.group;
  std::vector<std::vector<ElementId>> preimage(X.size());
  for (ElementId xh = 0; xh < Xhat.size(); ++xh) preimage[q.projection[xh]].push_back(xh);

  BranchingData out{X, q.projection, {}, {kIdentity}, false};
  for (ElementId x = 1; x < X.size(); ++x) {
    if (!is_strong_involution(X, x)) continue;
    const auto& pre = preimage[x];
    if (pre.size() == 1 && order(Xhat, pre[0]) == 4) {
      out.branching.push_back(x);
    } else {
      out.complement.push_back(x);
    }
  }
  out.complement_is_subgroup = is_subgroup(X, out.complement);
  return out;
}

}  // namespace tvg

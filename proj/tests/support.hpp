// Helpers shared by the unit tests and the acceptance runner. The oracles in
// here are deliberately naive re-implementations that share no code with the
// library beyond the TwoValuedGroup container.

#ifndef TVG_TESTS_SUPPORT_HPP
#define TVG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvg/constructions.hpp"
#include "tvg/core.hpp"

namespace oracle {

using tvg::ElementId;
using tvg::Pair;
using tvg::TwoValuedGroup;
using Tuple = std::vector<int>;

inline ElementId el(const TwoValuedGroup& X, const std::string& name) {
  auto id = X.find(name);
  if (!id) throw std::logic_error("no element named " + name);
  return *id;
}

// Every tuple of C_{d_1} x ... x C_{d_k}, lexicographically.
inline std::vector<Tuple> all_tuples(const std::vector<int>& d) {
  std::vector<Tuple> out{Tuple{}};
  for (int di : d) {
    std::vector<Tuple> next;
    for (const Tuple& t : out) {
      for (int r = 0; r < di; ++r) {
        Tuple u = t;
        u.push_back(r);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Tuple add(const std::vector<int>& d, const Tuple& a, const Tuple& b) {
  Tuple c(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) c[i] = (a[i] + b[i]) % d[i];
  return c;
}

inline Tuple neg(const std::vector<int>& d, const Tuple& a) {
  Tuple c(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) c[i] = (d[i] - a[i]) % d[i];
  return c;
}

// Coset group G/iota straight from the rule pi(g)*pi(h) = [pi(g+h), pi(g+iota(h))],
// orbits ordered by their lexicographically smallest tuple.
struct CosetTable {
  std::size_t n = 0;
  std::vector<Pair> table;
  std::map<Tuple, ElementId> orbit;
};

inline CosetTable coset_table(const std::vector<int>& d, const std::function<Tuple(const Tuple&)>& iota) {
  CosetTable c;
  for (const Tuple& t : all_tuples(d)) {
    if (c.orbit.count(t)) continue;
    const auto id = static_cast<ElementId>(c.n++);
    c.orbit[t] = id;
    c.orbit[iota(t)] = id;
  }
  c.table.resize(c.n * c.n);
  for (const auto& [g, pg] : c.orbit) {
    for (const auto& [h, ph] : c.orbit) {
      c.table[pg * c.n + ph] = Pair(c.orbit.at(add(d, g, h)), c.orbit.at(add(d, g, iota(h))));
    }
  }
  return c;
}

inline CosetTable antipodal_table(const std::vector<int>& d) {
  return coset_table(d, [&d](const Tuple& t) { return neg(d, t); });
}

// (a_1..a_n, b_1..b_n) -> (a, a + b)
inline CosetTable unipotent_table(int n) {
  std::vector<int> d(2 * n, 2);
  return coset_table(d, [n](const Tuple& t) {
    Tuple u = t;
    for (int i = 0; i < n; ++i) u[n + i] = (t[i] + t[n + i]) % 2;
    return u;
  });
}

inline std::vector<ElementId> sorted4(Pair a, Pair b) {
  std::vector<ElementId> v{a.lo, a.hi, b.lo, b.hi};
  std::sort(v.begin(), v.end());
  return v;
}

struct NaiveAxioms {
  bool identity = true, associative = true, inverses = true, commutative = true, involutive = true;
  bool group() const { return identity && associative && inverses; }
};

// Direct reading of the axioms on a raw row-major table, identity at 0.
inline NaiveAxioms naive_axioms(std::size_t n, const std::vector<Pair>& t) {
  NaiveAxioms r;
  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  for (std::size_t x = 0; x < n; ++x) {
    if (at(0, x) != Pair(x, x) || at(x, 0) != Pair(x, x)) r.identity = false;
    std::size_t left = 0, right = 0, inv = n;
    for (std::size_t y = 0; y < n; ++y) {
      left += at(x, y).contains(0);
      right += at(y, x).contains(0);
      if (at(x, y).contains(0) && at(y, x).contains(0)) inv = y;
      if (at(x, y) != at(y, x)) r.commutative = false;
    }
    if (left != 1 || right != 1 || inv == n) r.inverses = false;
    if (inv != x) r.involutive = false;
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Pair xy = at(x, y), yz = at(y, z);
        if (sorted4(at(xy.lo, z), at(xy.hi, z)) != sorted4(at(x, yz.lo), at(x, yz.hi))) r.associative = false;
      }
    }
  }
  return r;
}

inline NaiveAxioms naive_axioms(const TwoValuedGroup& X) {
  return naive_axioms(X.size(), std::vector<Pair>(X.table().begin(), X.table().end()));
}

// Random permutation fixing the identity.
template <class Rng>
std::vector<ElementId> random_relabeling(std::size_t n, Rng& rng) {
  std::vector<ElementId> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (n > 2) std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

// Element orders by repeated application of the recurrence, written out
// independently of the library's power calculus.
inline std::vector<std::size_t> naive_orders(const TwoValuedGroup& X) {
  std::vector<std::size_t> out(X.size());
  for (ElementId x = 0; x < X.size(); ++x) {
    ElementId prev = 0, cur = x;
    std::size_t k = 1;
    while (cur != 0) {
      const Pair p = X.at(x, cur);
      const ElementId next = p.other(prev);
      prev = cur;
      cur = next;
      ++k;
      if (k > 4 * X.size() + 4) throw std::logic_error("order did not terminate");
    }
    out[x] = x == 0 ? 1 : k;
  }
  return out;
}

// Number of elements of each order in C_{d_1} x ... x C_{d_k}.
inline std::map<std::size_t, std::size_t> abelian_order_counts(const std::vector<int>& d) {
  std::map<std::size_t, std::size_t> counts;
  for (const Tuple& t : all_tuples(d)) {
    std::size_t ord = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::size_t oi = static_cast<std::size_t>(d[i] / std::gcd(d[i], t[i]));
      ord = std::lcm(ord, oi);
    }
    ++counts[ord];
  }
  return counts;
}

// The map C4^2 -> C2^2 x C2^2, a1^k a2^l -> (b1^k b2^l, b1^[k/2] b2^[l/2]),
// pushed down to orbits. `well_defined` records whether all representatives of
// an orbit land in the same orbit.
struct ExIsoMap {
  TwoValuedGroup principal44;
  TwoValuedGroup unipotent2;
  std::vector<ElementId> f;
  bool well_defined = true;
};

inline ExIsoMap ex_iso_map() {
  const tvg::FinAbelianGroup A({4, 4});
  const tvg::FinAbelianGroup B({2, 2, 2, 2});
  auto pa = tvg::coset_group_with_projection(A, tvg::antipodal_involution(A));
  auto pu = tvg::coset_group_with_projection(B, tvg::unipotent_involution(2));
  constexpr ElementId kUnset = static_cast<ElementId>(-1);
  std::vector<ElementId> f(pa.group.size(), kUnset);
  bool ok = true;
  for (std::size_t g = 0; g < A.size(); ++g) {
    const auto kl = A.decode(g);
    const int k = kl[0], l = kl[1];
    const ElementId image = pu.projection[B.encode({k % 2, l % 2, k / 2, l / 2})];
    ElementId& slot = f[pa.projection[g]];
    if (slot != kUnset && slot != image) ok = false;
    slot = image;
  }
  return {std::move(pa.group), std::move(pu.group), std::move(f), ok};
}

}  // namespace oracle

#endif  // TVG_TESTS_SUPPORT_HPP

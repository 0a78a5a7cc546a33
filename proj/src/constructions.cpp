#include "tvg/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "tvg/errors.hpp"

namespace tvg {

FinAbelianGroup::FinAbelianGroup(std::vector<int> factors) {
  for (int d : factors) {
    if (d < 1) throw InvalidChain("cyclic factor " + std::to_string(d) + " is not a positive order");
    if (d == 1) continue;
    factors_.push_back(d);
    size_ *= static_cast<std::size_t>(d);
  }
}

bool FinAbelianGroup::is_canonical() const {
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (factors_[i] % factors_[i - 1] != 0) return false;
  }
  return true;
}

std::vector<int> FinAbelianGroup::decode(std::size_t index) const {
  std::vector<int> t(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    t[i] = static_cast<int>(index % d);
    index /= d;
  }
  return t;
}

std::size_t FinAbelianGroup::encode(const std::vector<int>& tuple) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int d = factors_[i];
    index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(((tuple[i] % d) + d) % d);
  }
  return index;
}

std::size_t FinAbelianGroup::add(std::size_t a, std::size_t b) const {
  std::size_t index = 0, stride = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    const std::size_t s = (a % d + b % d) % d;
    index += s * stride;
    stride *= d;
    a /= d;
    b /= d;
  }
  return index;
}

std::size_t FinAbelianGroup::negate(std::size_t a) const {
  std::size_t index = 0, stride = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    index += ((d - a % d) % d) * stride;
    stride *= d;
    a /= d;
  }
  return index;
}

std::size_t FinAbelianGroup::order_of(std::size_t a) const {
  std::size_t ord = 1;
  const std::vector<int> t = decode(a);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    const std::size_t o = d / std::gcd(d, static_cast<std::size_t>(t[i]));
    ord = std::lcm(ord, o);
  }
  return ord;
}

std::string FinAbelianGroup::tuple_name(std::size_t index) const {
  std::string s = "(";
  const std::vector<int> t = decode(index);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

InvolutiveAutomorphism antipodal_involution(const FinAbelianGroup& A) {
  InvolutiveAutomorphism iota;
  iota.map.resize(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) iota.map[a] = A.negate(a);
  return iota;
}

InvolutiveAutomorphism unipotent_involution(std::size_t n) {
  const FinAbelianGroup A(std::vector<int>(2 * n, 2));
  InvolutiveAutomorphism iota;
  iota.map.resize(A.size());
  for (std::size_t g = 0; g < A.size(); ++g) {
    std::vector<int> t = A.decode(g);
    for (std::size_t i = 0; i < n; ++i) t[n + i] ^= t[i];
    iota.map[g] = A.encode(t);
  }
  return iota;
}

CosetProjection coset_group_with_projection(const FinAbelianGroup& A,
                                            const InvolutiveAutomorphism& iota) {
  const std::size_t N = A.size();
  const auto& m = iota.map;
  if (m.size() != N) throw NotAutomorphism("involution map has the wrong length");
  std::vector<bool> hit(N, false);
  for (std::size_t a : m) {
    if (a >= N || hit[a]) throw NotAutomorphism("involution map is not a permutation");
    hit[a] = true;
  }
  for (std::size_t a = 0; a < N; ++a) {
    if (m[m[a]] != a) throw NotInvolutive("map is not an involution at " + A.tuple_name(a));
  }
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      if (m[A.add(a, b)] != A.add(m[a], m[b])) {
        throw NotAutomorphism("map is not additive at " + A.tuple_name(a) + ", " + A.tuple_name(b));
      }
    }
  }

  // Orbit representatives in increasing index order give the element order.
  std::vector<ElementId> proj(N);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < N; ++a) {
    const std::size_t rep = std::min(a, m[a]);
    if (rep == a) {
      proj[a] = static_cast<ElementId>(reps.size());
      reps.push_back(a);
    } else {
      proj[a] = proj[rep];
    }
  }

  const std::size_t n = reps.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t r : reps) names.push_back(A.tuple_name(r));
  std::vector<Pair> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t g = reps[i], h = reps[j];
      table[i * n + j] = Pair(proj[A.add(g, h)], proj[A.add(g, m[h])]);
    }
  }
  return {TwoValuedGroup(std::move(names), std::move(table)), std::move(proj)};
}

TwoValuedGroup coset_group(const FinAbelianGroup& A, const InvolutiveAutomorphism& iota) {
  return coset_group_with_projection(A, iota).group;
}

namespace {

void check_chain(const std::vector<int>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] < 2) throw InvalidChain("invariant factor " + std::to_string(chain[i]) + " < 2");
    if (i > 0 && chain[i] % chain[i - 1] != 0) {
      throw InvalidChain("invariant factors must form a divisor chain");
    }
  }
}

}  // namespace

TwoValuedGroup principal(const std::vector<int>& chain) {
  check_chain(chain);
  const FinAbelianGroup A(chain);
  return coset_group(A, antipodal_involution(A));
}

TwoValuedGroup unipotent(std::size_t n) {
  if (n < 1) throw InvalidChain("unipotent series starts at n = 1");
  const FinAbelianGroup A(std::vector<int>(2 * n, 2));
  return coset_group(A, unipotent_involution(n));
}

TwoValuedGroup special_series(std::size_t n) {
  if (n < 1) throw InvalidChain("special series starts at n = 1");
  const FinAbelianGroup V(std::vector<int>(n, 2));
  const std::size_t nv = V.size();
  const std::size_t size = nv + 1;
  const auto s = static_cast<ElementId>(nv);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < nv; ++v) names.push_back(V.tuple_name(v));
  names.push_back("s");

  std::vector<Pair> table(size * size);
  auto cell = [&](std::size_t a, std::size_t b) -> Pair& { return table[a * size + b]; };
  for (ElementId x = 0; x < nv; ++x) {
    for (ElementId y = 0; y < nv; ++y) {
      if (x == y && x != 0) {
        cell(x, y) = Pair(0, s);
      } else {
        // Boolean group: xy is the xor of the bit patterns.
        cell(x, y) = Pair::doubled(static_cast<ElementId>(V.add(x, y)));
      }
    }
    cell(x, s) = cell(s, x) = Pair::doubled(x == 0 ? s : x);
  }
  cell(s, s) = Pair(0, 0);
  return TwoValuedGroup(std::move(names), std::move(table));
}

TwoValuedGroup product_with_boolean(const TwoValuedGroup& X, std::size_t m) {
  if (m == 0) return X;
  const std::size_t n = X.size();
  const std::size_t nw = std::size_t{1} << m;
  const std::size_t size = n * nw;
  std::vector<std::string> names(size);
  for (std::size_t w = 0; w < nw; ++w) {
    std::string bits;
    for (std::size_t i = 0; i < m; ++i) bits += ((w >> i) & 1U) ? '1' : '0';
    for (std::size_t x = 0; x < n; ++x) names[x + n * w] = X.name(static_cast<ElementId>(x)) + "|" + bits;
  }
  std::vector<Pair> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    const auto x1 = static_cast<ElementId>(a % n);
    const std::size_t w1 = a / n;
    for (std::size_t b = 0; b < size; ++b) {
      const auto x2 = static_cast<ElementId>(b % n);
      const std::size_t w2 = b / n;
      const Pair p = X.at(x1, x2);
      const std::size_t offset = n * (w1 ^ w2);
      table[a * size + b] = Pair(static_cast<ElementId>(p.lo + offset),
                                 static_cast<ElementId>(p.hi + offset));
    }
  }
  return TwoValuedGroup(std::move(names), std::move(table));
}

TwoValuedGroup double_group(const FinAbelianGroup& A) {
  const std::size_t n = A.size();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back(A.tuple_name(a));
  std::vector<Pair> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = Pair::doubled(static_cast<ElementId>(A.add(a, b)));
    }
  }
  return TwoValuedGroup(std::move(names), std::move(table));
}

std::size_t principal_size(const std::vector<int>& chain) {
  std::size_t prod = 1, pow2 = 1;
  for (int d : chain) {
    prod *= static_cast<std::size_t>(d);
    if (d % 2 == 0) pow2 *= 2;
  }
  return (prod + pow2) / 2;
}

std::size_t unipotent_size(std::size_t n) {
  return (std::size_t{1} << (2 * n - 1)) + (std::size_t{1} << (n - 1));
}

std::size_t special_size(std::size_t n) { return (std::size_t{1} << n) + 1; }

}  // namespace tvg

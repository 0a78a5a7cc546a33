#include "tvg/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "tvg/cocycle.hpp"
#include "tvg/constructions.hpp"
#include "tvg/errors.hpp"
#include "tvg/structure.hpp"

namespace tvg {

std::string to_string(const ClassLabel& label) {
  std::ostringstream os;
  switch (label.kind) {
    case ClassLabel::Kind::Principal:
      os << "Principal(";
      for (std::size_t i = 0; i < label.factors.size(); ++i) os << (i ? "," : "") << label.factors[i];
      os << ")";
      break;
    case ClassLabel::Kind::Unipotent: os << "Unipotent(" << label.n << "," << label.m << ")"; break;
    case ClassLabel::Kind::Special: os << "Special(" << label.n << "," << label.m << ")"; break;
  }
  return os.str();
}

ClassLabel parse_label(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw ParseError("malformed label '" + text + "'");
  const std::string head = text.substr(0, open);
  const std::string body = text.substr(open + 1, text.size() - open - 2);
  std::vector<long> nums;
  std::stringstream ss(body);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      nums.push_back(std::stol(tok, &used));
      if (used != tok.size() || nums.back() < 0) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad number '" + tok + "' in label '" + text + "'");
    }
  }
  if (head == "Principal") return ClassLabel::principal(std::vector<int>(nums.begin(), nums.end()));
  if (nums.size() != 2) throw ParseError("label '" + text + "' needs two arguments");
  const auto n = static_cast<std::size_t>(nums[0]);
  const auto m = static_cast<std::size_t>(nums[1]);
  if (head == "Unipotent") return ClassLabel::unipotent(n, m);
  if (head == "Special") return ClassLabel::special(n, m);
  throw ParseError("unknown label kind '" + head + "'");
}

namespace {

std::vector<std::pair<int, int>> factorize(int d) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= d; ++p) {
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (d > 1) out.emplace_back(d, 1);
  return out;
}

int ipow(int p, int e) {
  int r = 1;
  while (e-- > 0) r *= p;
  return r;
}

}  // namespace

std::vector<int> canonical_chain(const std::vector<int>& cyclic_factors) {
  std::map<int, std::vector<int>> exps;  // prime -> exponents
  for (int f : cyclic_factors) {
    if (f < 1) throw InvalidChain("cyclic factor " + std::to_string(f) + " is not a positive order");
    for (auto [p, e] : factorize(f)) exps[p].push_back(e);
  }
  std::size_t k = 0;
  for (auto& [p, es] : exps) {
    std::sort(es.begin(), es.end(), std::greater<>());
    k = std::max(k, es.size());
  }
  // Largest invariant factor collects the largest power of every prime.
  std::vector<int> chain(k, 1);
  for (const auto& [p, es] : exps) {
    for (std::size_t i = 0; i < es.size(); ++i) chain[k - 1 - i] *= ipow(p, es[i]);
  }
  return chain;
}

ClassLabel canonical(const ClassLabel& label) {
  auto twos = [](std::size_t m, std::vector<int> extra) {
    std::vector<int> f(m, 2);
    f.insert(f.end(), extra.begin(), extra.end());
    return ClassLabel::principal(canonical_chain(f));
  };
  switch (label.kind) {
    case ClassLabel::Kind::Principal: return ClassLabel::principal(canonical_chain(label.factors));
    case ClassLabel::Kind::Unipotent:
      if (label.n == 0) return twos(label.m, {});
      if (label.n == 1) return twos(label.m, {4});
      if (label.n == 2) return twos(label.m, {4, 4});
      return label;
    case ClassLabel::Kind::Special:
      if (label.n == 0) return twos(label.m + 1, {});
      if (label.n == 1) return twos(label.m, {4});
      return label;
  }
  return label;
}

std::size_t label_size(const ClassLabel& label) {
  switch (label.kind) {
    case ClassLabel::Kind::Principal: {
      std::size_t prod = 1, pow2 = 1;
      for (int d : label.factors) {
        if (d < 1) throw InvalidChain("cyclic factor " + std::to_string(d) + " is not a positive order");
        prod *= static_cast<std::size_t>(d);
        if (d % 2 == 0) pow2 *= 2;
      }
      return (prod + pow2) / 2;
    }
    case ClassLabel::Kind::Unipotent:
      return (label.n == 0 ? 1 : unipotent_size(label.n)) << label.m;
    case ClassLabel::Kind::Special: return special_size(label.n) << label.m;
  }
  return 0;
}

TwoValuedGroup construct(const ClassLabel& label) {
  switch (label.kind) {
    case ClassLabel::Kind::Principal: {
      const FinAbelianGroup A(label.factors);
      return coset_group(A, antipodal_involution(A));
    }
    case ClassLabel::Kind::Unipotent:
      if (label.n == 0) return construct(canonical(label));
      return product_with_boolean(unipotent(label.n), label.m);
    case ClassLabel::Kind::Special:
      if (label.n == 0) return construct(canonical(label));
      return product_with_boolean(special_series(label.n), label.m);
  }
  throw InvalidChain("unknown label kind");
}

std::vector<ClassLabel> canonical_labels_of_size(std::size_t k) {
  std::vector<ClassLabel> out;
  // Principal: chains d_1 | ... | d_r with (prod + 2^#even)/2 = k, so the
  // product is below 2k.
  std::vector<int> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t prod) {
    const ClassLabel L = ClassLabel::principal(chain);
    if (label_size(L) == k) out.push_back(L);
    const int last = chain.empty() ? 1 : chain.back();
    for (int d = chain.empty() ? 2 : last; prod * static_cast<std::size_t>(d) < 2 * k; d += last) {
      if (d < 2) continue;
      chain.push_back(d);
      extend(prod * static_cast<std::size_t>(d));
      chain.pop_back();
    }
  };
  extend(1);
  for (std::size_t n = 3; unipotent_size(n) <= k; ++n) {
    for (std::size_t m = 0; (unipotent_size(n) << m) <= k; ++m) {
      if ((unipotent_size(n) << m) == k) out.push_back(ClassLabel::unipotent(n, m));
    }
  }
  for (std::size_t n = 2; special_size(n) <= k; ++n) {
    for (std::size_t m = 0; (special_size(n) << m) <= k; ++m) {
      if ((special_size(n) << m) == k) out.push_back(ClassLabel::special(n, m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Reconstruction reconstruct_abelian(const TwoValuedGroup& X, std::optional<ElementId> t_opt) {
  try {
    require_involutive_commutative(X);
  } catch (const NotInvolutiveCommutative& e) {
    throw PreconditionViolated(e.what());
  }
  if (is_special(X).special) throw PreconditionViolated("group is special");
  const auto n = static_cast<ElementId>(X.size());
  ElementId t = n;
  if (t_opt) {
    t = *t_opt;
    if (t >= n) throw IndexOutOfRange("element " + std::to_string(t) + " out of range");
  } else {
    for (ElementId x = 0; x < n && t == n; ++x) {
      const std::size_t o = order(X, x);
      if (o != 1 && o != 2 && o != 4) t = x;
    }
    if (t == n) throw PreconditionViolated("every element has order 1, 2 or 4");
  }
  const std::size_t ord_t = order(X, t);
  if (ord_t == 1 || ord_t == 2 || ord_t == 4) {
    throw PreconditionViolated("element " + X.name(t) + " has order " + std::to_string(ord_t));
  }

  Reconstruction rec;
  rec.t = t;
  std::vector<std::vector<std::size_t>> id(n, std::vector<std::size_t>(n, SIZE_MAX));
  for (ElementId x = 0; x < n; ++x) {
    const Pair p = X.at(t, x);
    for (ElementId q : {p.lo, p.hi}) {
      if (id[x][q] != SIZE_MAX) continue;
      id[x][q] = rec.first.size();
      rec.first.push_back(x);
      rec.second.push_back(q);
    }
  }
  const std::size_t N = rec.first.size();
  AbelianTable& A = rec.group;
  A.size = N;
  A.mul.assign(N * N, 0);
  A.identity = id[kIdentity][t];

  for (std::size_t a = 0; a < N; ++a) {
    const ElementId x = rec.first[a], p = rec.second[a];
    const ElementId pp = X.at(t, x).other(p);
    for (std::size_t b = 0; b < N; ++b) {
      const ElementId y = rec.first[b], q = rec.second[b];
      const ElementId qq = X.at(t, y).other(q);
      std::size_t found = SIZE_MAX;
      std::size_t count = 0;
      const Pair xy = X.at(x, y);
      for (ElementId z : {xy.lo, xy.hi}) {
        if (!X.at(p, qq).contains(z) || !X.at(pp, q).contains(z)) continue;
        const Pair tz = X.at(t, z);
        for (ElementId r : {tz.lo, tz.hi}) {
          if (!X.at(x, q).contains(r) || !X.at(p, y).contains(r)) continue;
          const ElementId rr = tz.other(r);
          if (!X.at(x, qq).contains(rr) || !X.at(pp, y).contains(rr)) continue;
          const std::size_t c = id[z][r];
          if (c != found) {
            found = c;
            ++count;
          }
        }
      }
      if (count != 1) {
        throw NonUniquePair(std::to_string(count) + " candidate products for (" + X.name(x) + "," +
                            X.name(p) + ") and (" + X.name(y) + "," + X.name(q) + ")");
      }
      A.mul[a * N + b] = found;
    }
  }

  for (std::size_t a = 0; a < N; ++a) {
    if (A(A.identity, a) != a || A(a, A.identity) != a) throw NotAssociative("(e,t) is not an identity");
    const ElementId x = rec.first[a];
    const std::size_t inv = id[x][X.at(t, x).other(rec.second[a])];
    if (A(a, inv) != A.identity) throw NotAssociative("(x,p') is not the inverse of (x,p)");
    for (std::size_t b = 0; b < N; ++b) {
      const std::size_t ab = A(a, b);
      for (std::size_t c = 0; c < N; ++c) {
        if (A(ab, c) != A(a, A(b, c))) throw NotAssociative("reconstructed product is not associative");
      }
    }
  }
  return rec;
}

std::vector<int> invariant_factors(const AbelianTable& A) {
  const std::size_t N = A.size;
  if (N == 0 || A.mul.size() != N * N || A.identity >= N) throw NotAbelian("malformed table");
  for (std::size_t a = 0; a < N; ++a) {
    if (A(A.identity, a) != a) throw NotAbelian("identity fails");
    bool has_inverse = false;
    for (std::size_t b = 0; b < N; ++b) {
      if (A(a, b) >= N) throw NotAbelian("entry out of range");
      if (A(a, b) != A(b, a)) throw NotAbelian("table is not commutative");
      if (A(a, b) == A.identity) has_inverse = true;
      for (std::size_t c = 0; c < N; ++c) {
        if (A(A(a, b), c) != A(a, A(b, c))) throw NotAbelian("table is not associative");
      }
    }
    if (!has_inverse) throw NotAbelian("missing inverse");
  }
  std::vector<std::size_t> ord(N, 0);
  for (std::size_t a = 0; a < N; ++a) {
    std::size_t k = 1;
    for (std::size_t x = a; x != A.identity; x = A(x, a)) ++k;
    ord[a] = k;
  }
  // Per prime p: c_j = #{a : ord(a) | p^j} = p^(sum_i min(e_i, j)), so
  // log_p(c_j / c_(j-1)) counts the cyclic p-factors of exponent >= j.
  std::vector<int> prime_powers;
  for (auto [p, e] : factorize(static_cast<int>(N))) {
    std::vector<int> at_least(e + 2, 0);
    std::size_t prev = 1;
    for (int j = 1; j <= e; ++j) {
      const auto pj = static_cast<std::size_t>(ipow(p, j));
      const auto cj = static_cast<std::size_t>(
          std::count_if(ord.begin(), ord.end(), [&](std::size_t o) { return pj % o == 0; }));
      std::size_t ratio = cj / prev;
      int r = 0;
      while (ratio > 1) {
        ratio /= static_cast<std::size_t>(p);
        ++r;
      }
      at_least[j] = r;
      prev = cj;
    }
    for (int j = 1; j <= e; ++j) {
      for (int c = 0; c < at_least[j] - at_least[j + 1]; ++c) prime_powers.push_back(ipow(p, j));
    }
  }
  return canonical_chain(prime_powers);
}

ClassLabel classify(const TwoValuedGroup& X) {
  require_involutive_commutative(X);
  const DirectFactorSplit split = split_direct_factor(X);
  const TwoValuedGroup& Xp = split.factor;
  const std::size_t m = split.m;
  if (Xp.size() == 1) return canonical(ClassLabel::principal(std::vector<int>(m, 2)));

  if (is_special(Xp).special) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) + 1 < Xp.size()) ++n;
    if ((std::size_t{1} << n) + 1 != Xp.size()) {
      throw PreconditionViolated("special factor has " + std::to_string(Xp.size()) + " elements");
    }
    return canonical(ClassLabel::special(n, m));
  }

  const std::vector<std::size_t> ords = orders(Xp);
  for (ElementId x = 0; x < Xp.size(); ++x) {
    if (ords[x] != 1 && ords[x] != 2 && ords[x] != 4) {
      const Reconstruction rec = reconstruct_abelian(Xp, x);
      std::vector<int> f = invariant_factors(rec.group);
      f.insert(f.end(), m, 2);
      return ClassLabel::principal(canonical_chain(f));
    }
  }

  const CocycleExtraction ext = extract_quasicocycle(Xp);
  const std::size_t n = ext.phi.dim();
  if (cohomology_invariant(ext.phi) == 1) {
    std::vector<int> f(m, 2);
    f.insert(f.end(), n, 4);
    return ClassLabel::principal(canonical_chain(f));
  }
  return canonical(ClassLabel::unipotent(n, m));
}

bool are_isomorphic(const TwoValuedGroup& X, const TwoValuedGroup& Z) {
  return X.size() == Z.size() && classify(X) == classify(Z);
}

}  // namespace tvg

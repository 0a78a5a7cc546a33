#include "tvg/core.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "tvg/errors.hpp"

namespace tvg {

Multiset make_multiset(std::vector<ElementId> elems) {
  std::sort(elems.begin(), elems.end());
  return elems;
}

TwoValuedGroup::TwoValuedGroup(std::vector<std::string> names, std::vector<Pair> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw NonSquareTable("a two-valued group needs at least the identity element");
  if (table_.size() != n * n) {
    throw NonSquareTable("table has " + std::to_string(table_.size()) + " cells, expected " +
                         std::to_string(n * n));
  }
  for (const Pair& p : table_) {
    if (p.hi >= n) throw IndexOutOfRange("table entry " + std::to_string(p.hi) + " out of range");
  }
}

TwoValuedGroup TwoValuedGroup::from_table(std::size_t n, std::vector<Pair> table) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  return TwoValuedGroup(std::move(names), std::move(table));
}

Pair TwoValuedGroup::product(ElementId a, ElementId b) const {
  if (a >= size() || b >= size()) {
    throw IndexOutOfRange("product(" + std::to_string(a) + ", " + std::to_string(b) +
                          ") on a group of size " + std::to_string(size()));
  }
  return at(a, b);
}

const std::string& TwoValuedGroup::name(ElementId x) const {
  if (x >= size()) throw IndexOutOfRange("element " + std::to_string(x) + " out of range");
  return names_[x];
}

std::optional<ElementId> TwoValuedGroup::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ElementId>(it - names_.begin());
}

TwoValuedGroup TwoValuedGroup::relabeled(std::span<const ElementId> perm) const {
  const std::size_t n = size();
  if (perm.size() != n || perm[0] != 0) throw IndexOutOfRange("relabeling must fix the identity");
  std::vector<std::string> names(n);
  std::vector<Pair> table(n * n);
  for (ElementId a = 0; a < n; ++a) {
    names[perm[a]] = names_[a];
    for (ElementId b = 0; b < n; ++b) {
      const Pair p = at(a, b);
      table[perm[a] * n + perm[b]] = Pair(perm[p.lo], perm[p.hi]);
    }
  }
  return TwoValuedGroup(std::move(names), std::move(table));
}

Pair product(const TwoValuedGroup& X, ElementId a, ElementId b) { return X.product(a, b); }

Multiset product_fold(const TwoValuedGroup& X, const Multiset& m, ElementId b) {
  Multiset out;
  out.reserve(2 * m.size());
  for (ElementId x : m) {
    const Pair p = X.product(x, b);
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Multiset product_fold(const TwoValuedGroup& X, ElementId a, const Multiset& m) {
  Multiset out;
  out.reserve(2 * m.size());
  for (ElementId x : m) {
    const Pair p = X.product(a, x);
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::StrongIdentity: return "strong-identity";
    case Axiom::Associativity: return "associativity";
    case Axiom::InverseExistence: return "inverse-existence";
    case Axiom::InverseUniqueness: return "inverse-uniqueness";
    case Axiom::Commutativity: return "commutativity";
    case Axiom::Involutivity: return "involutivity";
  }
  return "unknown";
}

bool is_axiom_level(Axiom a) {
  return a == Axiom::StrongIdentity || a == Axiom::Associativity ||
         a == Axiom::InverseExistence || a == Axiom::InverseUniqueness;
}

namespace {

using Quad = std::array<ElementId, 4>;

inline void sort4(Quad& q) {
  auto cswap = [&](int i, int j) {
    if (q[j] < q[i]) std::swap(q[i], q[j]);
  };
  cswap(0, 1);
  cswap(2, 3);
  cswap(0, 2);
  cswap(1, 3);
  cswap(1, 2);
}

class ReportBuilder {
 public:
  explicit ReportBuilder(std::size_t cap) : cap_(cap) {}

  void add(Axiom a, std::vector<ElementId> witness) {
    auto idx = static_cast<std::size_t>(a);
    if (report_.violation_counts[idx]++ < cap_) {
      report_.violations.push_back({a, std::move(witness)});
    }
    if (is_axiom_level(a)) report_.is_two_valued_group = false;
    if (a == Axiom::Commutativity) report_.is_commutative = false;
    if (a == Axiom::Involutivity) report_.is_involutive = false;
  }

  ValidationReport finish() {
    std::sort(report_.violations.begin(), report_.violations.end());
    return std::move(report_);
  }

 private:
  std::size_t cap_;
  ValidationReport report_;
};

}  // namespace

ValidationReport verify_axioms(const TwoValuedGroup& X, std::size_t max_witnesses_per_axiom) {
  const auto n = static_cast<ElementId>(X.size());
  const ElementId e = X.identity();
  ReportBuilder rb(max_witnesses_per_axiom);

  for (ElementId x = 0; x < n; ++x) {
    if (X.at(e, x) != Pair::doubled(x) || X.at(x, e) != Pair::doubled(x)) {
      rb.add(Axiom::StrongIdentity, {x});
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const Pair xy = X.at(x, y);
      for (ElementId z = 0; z < n; ++z) {
        const Pair yz = X.at(y, z);
        const Pair l1 = X.at(xy.lo, z), l2 = X.at(xy.hi, z);
        const Pair r1 = X.at(x, yz.lo), r2 = X.at(x, yz.hi);
        Quad left{l1.lo, l1.hi, l2.lo, l2.hi};
        Quad right{r1.lo, r1.hi, r2.lo, r2.hi};
        sort4(left);
        sort4(right);
        if (left != right) rb.add(Axiom::Associativity, {x, y, z});
      }
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    std::vector<ElementId> candidates;
    bool exists = false;
    for (ElementId y = 0; y < n; ++y) {
      const bool right = X.at(x, y).contains(e);
      const bool left = X.at(y, x).contains(e);
      if (right || left) candidates.push_back(y);
      if (right && left) exists = true;
    }
    if (!exists) rb.add(Axiom::InverseExistence, {x});
    if (candidates.size() > 1) {
      std::vector<ElementId> w{x};
      w.insert(w.end(), candidates.begin(), candidates.end());
      rb.add(Axiom::InverseUniqueness, std::move(w));
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      if (X.at(x, y) != X.at(y, x)) rb.add(Axiom::Commutativity, {x, y});
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    if (!X.at(x, x).contains(e)) rb.add(Axiom::Involutivity, {x});
  }

  return rb.finish();
}

void require_involutive_commutative(const TwoValuedGroup& X) {
  const ValidationReport r = verify_axioms(X, 1);
  if (!r.involutive_commutative_group()) {
    std::string what = "group is not an involutive commutative two-valued group";
    if (!r.violations.empty()) what += " (" + to_string(r.violations.front().axiom) + ")";
    throw NotInvolutiveCommutative(what);
  }
}

std::vector<ElementId> power_sequence(const TwoValuedGroup& X, ElementId x) {
  if (x >= X.size()) throw IndexOutOfRange("element " + std::to_string(x) + " out of range");
  const ElementId e = X.identity();
  std::vector<ElementId> seq{e};
  if (x == e) return seq;
  seq.push_back(x);
  // The sequence of a finite involutive group returns to e within 2n steps.
  const std::size_t limit = 2 * X.size() + 2;
  while (seq.size() <= limit) {
    const ElementId prev = seq[seq.size() - 2];
    const ElementId cur = seq.back();
    const Pair p = X.at(x, cur);
    if (p != X.at(cur, x) || !p.contains(prev)) {
      throw AmbiguousPower("power sequence of element " + std::to_string(x) +
                           " breaks at exponent " + std::to_string(seq.size() - 1));
    }
    const ElementId next = p.other(prev);
    if (next == e) return seq;
    seq.push_back(next);
  }
  throw AmbiguousPower("power sequence of element " + std::to_string(x) + " never returns to e");
}

ElementId power(const TwoValuedGroup& X, ElementId x, long long k) {
  const std::vector<ElementId> seq = power_sequence(X, x);
  const unsigned long long mag = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                                       : static_cast<unsigned long long>(k);
  return seq[mag % seq.size()];
}

std::size_t order(const TwoValuedGroup& X, ElementId x) { return power_sequence(X, x).size(); }

std::vector<std::size_t> orders(const TwoValuedGroup& X) {
  std::vector<std::size_t> out(X.size());
  for (ElementId x = 0; x < X.size(); ++x) out[x] = order(X, x);
  return out;
}

}  // namespace tvg

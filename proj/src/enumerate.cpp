#include "tvg/enumerate.hpp"

#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "tvg/errors.hpp"
#include "tvg/isomorphism.hpp"

namespace tvg {

namespace {

constexpr std::size_t kMaxEnumerationSize = 6;

class Search {
 public:
  Search(std::size_t k, EnumerationMode mode, std::uint64_t budget)
      : k_(k), mode_(mode), budget_(budget), table_(k * k), known_(k * k, false), units_(k, 0) {
    for (ElementId x = 0; x < k; ++x) {
      set(kIdentity, x, Pair::doubled(x));
    }
    for (ElementId i = 1; i < k; ++i) {
      for (ElementId j = i; j < k; ++j) cells_.emplace_back(i, j);
    }
  }

  void run() { descend(0); }

  std::set<std::vector<Pair>> found;
  EnumerationStats stats;

 private:
  void set(ElementId a, ElementId b, Pair p) {
    table_[a * k_ + b] = table_[b * k_ + a] = p;
    known_[a * k_ + b] = known_[b * k_ + a] = true;
  }
  void unset(ElementId a, ElementId b) { known_[a * k_ + b] = known_[b * k_ + a] = false; }
  bool known(ElementId a, ElementId b) const { return known_[a * k_ + b]; }
  Pair at(ElementId a, ElementId b) const { return table_[a * k_ + b]; }

  // Associativity on every triple whose products are all determined.
  bool associative_so_far() const {
    for (ElementId x = 1; x < k_; ++x) {
      for (ElementId y = 1; y < k_; ++y) {
        if (!known(x, y)) continue;
        const Pair xy = at(x, y);
        for (ElementId z = 1; z < k_; ++z) {
          if (!known(y, z) || !known(xy.lo, z) || !known(xy.hi, z)) continue;
          const Pair yz = at(y, z);
          if (!known(x, yz.lo) || !known(x, yz.hi)) continue;
          const Pair l1 = at(xy.lo, z), l2 = at(xy.hi, z), r1 = at(x, yz.lo), r2 = at(x, yz.hi);
          if (make_multiset({l1.lo, l1.hi, l2.lo, l2.hi}) != make_multiset({r1.lo, r1.hi, r2.lo, r2.hi})) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == cells_.size()) {
      leaf();
      return;
    }
    const auto [i, j] = cells_[depth];
    for (ElementId lo = 0; lo < k_; ++lo) {
      if (mode_ == EnumerationMode::InvolutiveCommutative && (i == j) != (lo == kIdentity)) continue;
      for (ElementId hi = lo; hi < k_; ++hi) {
        if (++stats.nodes > budget_) {
          throw BudgetExceeded("enumeration of size " + std::to_string(k_) + " exceeded " +
                               std::to_string(budget_) + " nodes");
        }
        const Pair p(lo, hi);
        // Inverse uniqueness: at most one partner y with e in x*y.
        const bool unit = p.contains(kIdentity);
        if (unit && (units_[i] > 0 || units_[j] > 0)) continue;
        set(i, j, p);
        if (unit) {
          ++units_[i];
          if (j != i) ++units_[j];
        }
        if (associative_so_far()) descend(depth + 1);
        if (unit) {
          --units_[i];
          if (j != i) --units_[j];
        }
        unset(i, j);
      }
    }
  }

  void leaf() {
    const TwoValuedGroup X = TwoValuedGroup::from_table(k_, table_);
    const ValidationReport r = verify_axioms(X, 1);
    if (!r.is_two_valued_group || !r.is_commutative) return;
    if (mode_ == EnumerationMode::InvolutiveCommutative && !r.is_involutive) return;
    ++stats.leaves;
    const TwoValuedGroup c = canonical_form(X, budget_);
    found.emplace(c.table().begin(), c.table().end());
  }

  std::size_t k_;
  EnumerationMode mode_;
  std::uint64_t budget_;
  std::vector<Pair> table_;
  std::vector<bool> known_;
  std::vector<int> units_;
  std::vector<std::pair<ElementId, ElementId>> cells_;
};

}  // namespace

std::uint64_t default_enumeration_budget() {
  if (const char* env = std::getenv("TVG_SEARCH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 2'000'000'000ULL;
}

std::vector<TwoValuedGroup> enumerate_all(std::size_t k, EnumerationMode mode, std::uint64_t budget,
                                          EnumerationStats* stats) {
  if (k == 0) throw PreconditionViolated("a group has at least one element");
  if (k > kMaxEnumerationSize) {
    throw BudgetExceeded("exhaustive enumeration is limited to " + std::to_string(kMaxEnumerationSize) +
                         " elements");
  }
  Search s(k, mode, budget);
  s.run();
  if (stats) *stats = s.stats;
  std::vector<TwoValuedGroup> out;
  for (const auto& t : s.found) out.push_back(TwoValuedGroup::from_table(k, t));
  return out;
}

}  // namespace tvg

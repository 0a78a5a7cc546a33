#include "tvg/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>

#include "tvg/errors.hpp"

namespace tvg {

namespace {

using Signature = std::vector<std::int64_t>;

// Replaces every signature by its rank among all distinct signatures.
std::vector<std::vector<std::size_t>> rank(const std::vector<std::vector<Signature>>& sigs) {
  std::map<Signature, std::size_t> ids;
  for (const auto& g : sigs) {
    for (const auto& s : g) ids.emplace(s, 0);
  }
  std::size_t next = 0;
  for (auto& [s, id] : ids) id = next++;
  std::vector<std::vector<std::size_t>> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    for (const auto& s : sigs[i]) out[i].push_back(ids.at(s));
  }
  return out;
}

std::int64_t order_or_zero(const TwoValuedGroup& X, ElementId x) {
  try {
    return static_cast<std::int64_t>(order(X, x));
  } catch (const AmbiguousPower&) {
    return 0;
  }
}

Signature initial_signature(const TwoValuedGroup& X, ElementId x) {
  const Pair xx = X.at(x, x);
  std::int64_t doubled = 0, unit = 0, comm = 0, self = 0;
  for (ElementId y = 0; y < X.size(); ++y) {
    const Pair p = X.at(x, y);
    doubled += p.is_doubled();
    unit += p.contains(kIdentity);
    comm += p == X.at(y, x);
    self += p.contains(x);
  }
  // x != e comes first so the identity always ranks lowest.
  return {x != kIdentity, xx.is_doubled(), xx.contains(kIdentity), xx.contains(x), order_or_zero(X, x),
          doubled, unit, comm, self};
}

std::vector<std::vector<std::size_t>> joint_colors(const std::vector<const TwoValuedGroup*>& groups) {
  std::vector<std::vector<Signature>> sigs(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (ElementId x = 0; x < groups[g]->size(); ++x) sigs[g].push_back(initial_signature(*groups[g], x));
  }
  auto colors = rank(sigs);
  auto count = [](const std::vector<std::vector<std::size_t>>& c) {
    std::size_t mx = 0;
    for (const auto& v : c) {
      for (std::size_t id : v) mx = std::max(mx, id + 1);
    }
    return mx;
  };
  std::size_t classes = count(colors);
  for (;;) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const TwoValuedGroup& X = *groups[g];
      const auto& c = colors[g];
      for (ElementId x = 0; x < X.size(); ++x) {
        std::vector<std::array<std::size_t, 5>> rows;
        for (ElementId y = 0; y < X.size(); ++y) {
          const Pair l = X.at(x, y), r = X.at(y, x);
          rows.push_back({c[y], std::min(c[l.lo], c[l.hi]), std::max(c[l.lo], c[l.hi]),
                          std::min(c[r.lo], c[r.hi]), std::max(c[r.lo], c[r.hi])});
        }
        std::sort(rows.begin(), rows.end());
        Signature s{static_cast<std::int64_t>(c[x])};
        for (const auto& row : rows) s.insert(s.end(), row.begin(), row.end());
        sigs[g][x] = std::move(s);
      }
    }
    auto next = rank(sigs);
    const std::size_t next_classes = count(next);
    colors = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colors;
}

}  // namespace

std::vector<std::size_t> refined_colors(const TwoValuedGroup& X) { return joint_colors({&X}).front(); }

std::optional<std::vector<ElementId>> witness_isomorphism(const TwoValuedGroup& X, const TwoValuedGroup& Z,
                                                          std::uint64_t node_budget) {
  const std::size_t n = X.size();
  if (Z.size() != n) return std::nullopt;
  const auto colors = joint_colors({&X, &Z});
  const auto& cx = colors[0];
  const auto& cz = colors[1];
  {
    auto hx = cx, hz = cz;
    std::sort(hx.begin(), hx.end());
    std::sort(hz.begin(), hz.end());
    if (hx != hz) return std::nullopt;
  }
  std::vector<std::size_t> class_size(2 * n + 1, 0);
  for (std::size_t c : cx) ++class_size[c];

  std::vector<ElementId> order_x;
  for (ElementId x = 1; x < n; ++x) order_x.push_back(x);
  std::stable_sort(order_x.begin(), order_x.end(),
                   [&](ElementId a, ElementId b) { return class_size[cx[a]] < class_size[cx[b]]; });

  constexpr ElementId kNone = static_cast<ElementId>(-1);
  std::vector<ElementId> f(n, kNone), finv(n, kNone);
  f[kIdentity] = finv[kIdentity] = kIdentity;
  std::vector<ElementId> assigned{kIdentity};
  std::uint64_t nodes = 0;

  // Is X-product P compatible with Z-product Q under the partial map?
  auto compatible = [&](Pair P, Pair Q) {
    const bool lo = f[P.lo] != kNone, hi = f[P.hi] != kNone;
    if (lo && hi) return Pair(f[P.lo], f[P.hi]) == Q;
    if (lo || hi) {
      const ElementId p = lo ? P.lo : P.hi;
      if (!Q.contains(f[p])) return false;
      const ElementId rest = Q.other(f[p]);
      return finv[rest] == kNone || finv[rest] == P.other(p);
    }
    return finv[Q.lo] == kNone && finv[Q.hi] == kNone;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == order_x.size()) return true;
    const ElementId x = order_x[depth];
    for (ElementId z = 1; z < n; ++z) {
      if (finv[z] != kNone || cz[z] != cx[x]) continue;
      if (++nodes > node_budget) {
        throw BudgetExceeded("isomorphism search exceeded " + std::to_string(node_budget) + " nodes");
      }
      f[x] = z;
      finv[z] = x;
      assigned.push_back(x);
      bool ok = true;
      for (ElementId a : assigned) {
        if (!compatible(X.at(x, a), Z.at(z, f[a])) || !compatible(X.at(a, x), Z.at(f[a], z))) {
          ok = false;
          break;
        }
      }
      if (ok && search(depth + 1)) return true;
      assigned.pop_back();
      f[x] = kNone;
      finv[z] = kNone;
    }
    return false;
  };

  if (!search(0)) return std::nullopt;
  return f;
}

std::vector<ElementId> canonical_permutation(const TwoValuedGroup& X, std::uint64_t budget) {
  const std::size_t n = X.size();
  const std::vector<std::size_t> colors = refined_colors(X);
  std::map<std::size_t, std::vector<ElementId>> by_color;
  for (ElementId x = 0; x < n; ++x) by_color[colors[x]].push_back(x);
  std::vector<std::vector<ElementId>> classes;
  std::uint64_t combos = 1;
  for (auto& [c, members] : by_color) {
    for (std::uint64_t k = 2; k <= members.size(); ++k) {
      combos *= k;
      if (combos > budget) throw BudgetExceeded("canonical form needs too many relabelings");
    }
    classes.push_back(members);
  }

  std::vector<ElementId> perm(n), best_perm;
  std::vector<Pair> best, table(n * n);
  for (;;) {
    ElementId pos = 0;
    for (const auto& cls : classes) {
      for (ElementId x : cls) perm[x] = pos++;
    }
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        const Pair p = X.at(a, b);
        table[perm[a] * n + perm[b]] = Pair(perm[p.lo], perm[p.hi]);
      }
    }
    if (best_perm.empty() || table < best) {
      best = table;
      best_perm = perm;
    }
    std::size_t i = classes.size();
    while (i > 0 && !std::next_permutation(classes[i - 1].begin(), classes[i - 1].end())) --i;
    if (i == 0) break;
  }
  return best_perm;
}

TwoValuedGroup canonical_form(const TwoValuedGroup& X, std::uint64_t budget) {
  const TwoValuedGroup Y = X.relabeled(canonical_permutation(X, budget));
  return TwoValuedGroup::from_table(Y.size(), std::vector<Pair>(Y.table().begin(), Y.table().end()));
}

}  // namespace tvg

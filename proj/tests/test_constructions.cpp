#include <gtest/gtest.h>

#include <map>

#include "support.hpp"
#include "tvg/constructions.hpp"
#include "tvg/errors.hpp"

using namespace tvg;
using oracle::el;

namespace {

bool table_is(const TwoValuedGroup& X, const oracle::CosetTable& c) {
  return X.size() == c.n && std::equal(c.table.begin(), c.table.end(), X.table().begin());
}

std::map<std::size_t, std::size_t> order_counts(const TwoValuedGroup& X) {
  std::map<std::size_t, std::size_t> m;
  for (std::size_t o : orders(X)) ++m[o];
  return m;
}

}  // namespace

TEST(FinAbelianGroup, MixedRadix) {
  const FinAbelianGroup A({2, 6});
  EXPECT_EQ(A.size(), 12u);
  EXPECT_TRUE(A.is_canonical());
  EXPECT_FALSE(FinAbelianGroup({4, 6}).is_canonical());
  EXPECT_EQ(A.decode(7), (std::vector<int>{1, 1}));
  EXPECT_EQ(A.encode({1, 5}), 11u);
  EXPECT_EQ(A.add(A.encode({1, 5}), A.encode({1, 2})), A.encode({0, 1}));
  EXPECT_EQ(A.negate(A.encode({1, 2})), A.encode({1, 4}));
  EXPECT_EQ(A.order_of(A.encode({1, 2})), 6u);
  EXPECT_EQ(A.tuple_name(A.encode({1, 3})), "(1,3)");
  EXPECT_THROW(FinAbelianGroup({0}), InvalidChain);
  EXPECT_EQ(FinAbelianGroup({1, 3}).factors(), std::vector<int>{3});
}

TEST(CosetGroup, AntipodalC4IsPrincipal4) {
  const FinAbelianGroup A({4});
  EXPECT_TRUE(coset_group(A, antipodal_involution(A)).same_table(principal({4})));
}

TEST(CosetGroup, UnipotentInvolutionGivesUnipotentSeries) {
  EXPECT_TRUE(coset_group(FinAbelianGroup({2, 2, 2, 2}), unipotent_involution(2)).same_table(unipotent(2)));
}

TEST(CosetGroup, C6Orders) {
  const auto X = coset_group(FinAbelianGroup({6}), antipodal_involution(FinAbelianGroup({6})));
  EXPECT_EQ(X.size(), 4u);
  auto ord = orders(X);
  std::sort(ord.begin(), ord.end());
  EXPECT_EQ(ord, (std::vector<std::size_t>{1, 2, 3, 6}));
}

TEST(CosetGroup, MatchesDirectRule) {
  for (const std::vector<int>& d : {std::vector<int>{5}, {8}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 4}, {2, 6}}) {
    EXPECT_TRUE(table_is(principal(d), oracle::antipodal_table(d))) << FinAbelianGroup(d).tuple_name(0);
  }
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(table_is(unipotent(n), oracle::unipotent_table(n))) << n;
}

TEST(CosetGroup, ArbitraryInvolution) {
  // swap of the two factors of C3 x C3
  const FinAbelianGroup A({3, 3});
  InvolutiveAutomorphism swap;
  for (std::size_t g = 0; g < A.size(); ++g) {
    const auto t = A.decode(g);
    swap.map.push_back(A.encode({t[1], t[0]}));
  }
  const auto X = coset_group(A, swap);
  const auto expect = oracle::coset_table({3, 3}, [](const oracle::Tuple& t) { return oracle::Tuple{t[1], t[0]}; });
  EXPECT_TRUE(table_is(X, expect));
  const auto r = verify_axioms(X);
  EXPECT_TRUE(r.is_two_valued_group);
  EXPECT_FALSE(r.is_involutive);  // (1,2) is neither its own inverse nor swapped to it
}

TEST(CosetGroup, RejectsBadMaps) {
  const FinAbelianGroup C4({4});
  EXPECT_THROW(coset_group(C4, {{0, 2, 1, 3}}), NotAutomorphism);
  EXPECT_THROW(coset_group(C4, {{0, 1, 1, 3}}), NotAutomorphism);
  // order-3 automorphism (a,b) -> (b, a+b) of C2^2
  const FinAbelianGroup V({2, 2});
  InvolutiveAutomorphism rot;
  for (std::size_t g = 0; g < 4; ++g) {
    const auto t = V.decode(g);
    rot.map.push_back(V.encode({t[1], (t[0] + t[1]) % 2}));
  }
  EXPECT_THROW(coset_group(V, rot), NotInvolutive);
}

TEST(Principal, Sizes) {
  EXPECT_EQ(principal({4}).size(), 3u);
  EXPECT_EQ(principal({4, 4}).size(), 10u);
  const auto X = principal({2});
  ASSERT_EQ(X.size(), 2u);
  EXPECT_EQ(X.at(1, 1), Pair(0, 0));
  for (const std::vector<int>& d : {std::vector<int>{3}, {6}, {2, 2}, {2, 6}, {3, 9}, {2, 2, 4}, {64}}) {
    EXPECT_EQ(principal(d).size(), principal_size(d));
    std::size_t prod = 1, even = 0;
    for (int x : d) prod *= x, even += x % 2 == 0;
    EXPECT_EQ(principal_size(d), (prod + (std::size_t{1} << even)) / 2);
  }
}

TEST(Principal, InvalidChains) {
  EXPECT_THROW(principal({4, 6}), InvalidChain);
  EXPECT_THROW(principal({1}), InvalidChain);
  EXPECT_THROW(principal({0, 2}), InvalidChain);
}

TEST(Unipotent, SmallestTable) {
  const auto U = unipotent(1);
  ASSERT_EQ(U.size(), 3u);
  const ElementId v = el(U, "(0,1)"), x = el(U, "(1,0)");
  EXPECT_EQ(U.at(v, v), Pair(kIdentity, kIdentity));
  EXPECT_EQ(U.at(v, x), Pair(x, x));
  EXPECT_EQ(U.at(x, x), Pair(kIdentity, v));
}

TEST(Unipotent, Sizes) {
  EXPECT_EQ(unipotent(2).size(), 10u);
  EXPECT_EQ(unipotent(3).size(), 36u);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(unipotent_size(n), (1u << (2 * n - 1)) + (1u << (n - 1)));
  EXPECT_THROW(unipotent(0), InvalidChain);
}

TEST(Special, Y1Table) {
  const auto Y = special_series(1);
  ASSERT_EQ(Y.size(), 3u);
  const ElementId s = el(Y, "s"), x = el(Y, "(1)");
  EXPECT_EQ(Y.at(s, s), Pair(kIdentity, kIdentity));
  EXPECT_EQ(Y.at(s, x), Pair(x, x));
  EXPECT_EQ(Y.at(x, x), Pair(kIdentity, s));
}

TEST(Special, Y2FullTable) {
  const auto Y = special_series(2);
  ASSERT_EQ(Y.size(), 5u);
  const ElementId e = kIdentity, x = el(Y, "(0,1)"), y = el(Y, "(1,0)"), z = el(Y, "(1,1)"), s = el(Y, "s");
  for (ElementId a : {x, y, z}) {
    EXPECT_EQ(Y.at(a, a), Pair(e, s));
    EXPECT_EQ(Y.at(s, a), Pair(a, a));
  }
  EXPECT_EQ(Y.at(s, s), Pair(e, e));
  EXPECT_EQ(Y.at(x, y), Pair(z, z));
  EXPECT_EQ(Y.at(y, z), Pair(x, x));
  EXPECT_EQ(Y.at(z, x), Pair(y, y));
}

TEST(Special, Sizes) {
  EXPECT_EQ(special_series(4).size(), 17u);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(special_size(n), (1u << n) + 1);
}

TEST(ProductWithBoolean, Layout) {
  const auto Y = special_series(1);
  EXPECT_TRUE(product_with_boolean(Y, 0).same_table(Y));
  const auto P = product_with_boolean(Y, 1);
  ASSERT_EQ(P.size(), 6u);
  // (x1,w1)*(x2,w2) = (x1*x2, w1 w2), index x + |X| w
  for (ElementId a = 0; a < 6; ++a) {
    for (ElementId b = 0; b < 6; ++b) {
      const Pair base = Y.at(a % 3, b % 3);
      const ElementId w = ((a / 3) ^ (b / 3)) * 3;
      EXPECT_EQ(P.at(a, b), Pair(base.lo + w, base.hi + w));
    }
  }
  EXPECT_EQ(product_with_boolean(unipotent(2), 2).size(), 40u);
}

TEST(Double, BooleanDoubleIsPrincipal) {
  EXPECT_TRUE(double_group(FinAbelianGroup({2, 2, 2})).same_table(principal({2, 2, 2})));
  EXPECT_EQ(double_group(FinAbelianGroup({})).size(), 1u);
  const auto r = verify_axioms(double_group(FinAbelianGroup({3})));
  EXPECT_TRUE(r.is_two_valued_group);
  EXPECT_FALSE(r.is_involutive);
}

TEST(Sweep, EverySeriesMemberIsInvolutiveCommutative) {
  for (const std::vector<int>& d : {std::vector<int>{2}, {7}, {2, 4}, {3, 6}, {2, 2, 2}, {2, 2, 4}}) {
    for (std::size_t m = 0; m <= 1; ++m) {
      EXPECT_TRUE(verify_axioms(product_with_boolean(principal(d), m)).involutive_commutative_group());
    }
  }
  for (std::size_t n = 1; n <= 2; ++n) EXPECT_TRUE(verify_axioms(unipotent(n)).involutive_commutative_group());
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(verify_axioms(special_series(n)).involutive_commutative_group());
}

// ord pi(a) = ord a for every a, and the order counts compare as
// N_2(X) = N_2(A), N_k(X) = N_k(A)/2 for k > 2.
TEST(Orders, ProjectionPreservesOrders) {
  for (const std::vector<int>& d : {std::vector<int>{5}, {6}, {2, 4}, {3, 3}, {8}, {2, 6}, {4, 4}}) {
    const FinAbelianGroup A(d);
    const auto c = coset_group_with_projection(A, antipodal_involution(A));
    const auto ord = orders(c.group);
    for (std::size_t g = 0; g < A.size(); ++g) ASSERT_EQ(ord[c.projection[g]], A.order_of(g));
    const auto NA = oracle::abelian_order_counts(d);
    const auto NX = order_counts(c.group);
    for (const auto& [k, count] : NA) {
      if (k == 1) continue;
      EXPECT_EQ(NX.count(k) ? NX.at(k) : 0u, k == 2 ? count : count / 2) << "order " << k;
    }
  }
}

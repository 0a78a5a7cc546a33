#include <gtest/gtest.h>

#include <cstdlib>

#include "tvg/classify.hpp"
#include "tvg/constructions.hpp"
#include "tvg/enumerate.hpp"
#include "tvg/errors.hpp"
#include "tvg/isomorphism.hpp"

using namespace tvg;

namespace {

std::vector<std::string> labels(const std::vector<TwoValuedGroup>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(to_string(classify(g)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate_all(1, EnumerationMode::InvolutiveCommutative).size(), 1u);
  EXPECT_EQ(labels(enumerate_all(2, EnumerationMode::InvolutiveCommutative)),
            (std::vector<std::string>{"Principal(2)", "Principal(3)"}));
  EXPECT_EQ(labels(enumerate_all(3, EnumerationMode::InvolutiveCommutative)),
            (std::vector<std::string>{"Principal(4)", "Principal(5)"}));
}

TEST(Enumerate, MatchesLabelArithmetic) {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto groups = enumerate_all(k, EnumerationMode::InvolutiveCommutative);
    std::vector<std::string> expect;
    for (const auto& L : canonical_labels_of_size(k)) expect.push_back(to_string(L));
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(labels(groups), expect) << "k = " << k;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      EXPECT_TRUE(verify_axioms(groups[i]).involutive_commutative_group());
      for (std::size_t j = i + 1; j < groups.size(); ++j)
        EXPECT_FALSE(witness_isomorphism(groups[i], groups[j]).has_value());
    }
  }
}

TEST(Enumerate, CommutativeModeFindsNonInvolutiveGroups) {
  const auto all = enumerate_all(3, EnumerationMode::Commutative);
  const auto ic = enumerate_all(3, EnumerationMode::InvolutiveCommutative);
  EXPECT_GT(all.size(), ic.size());
  const auto d3 = double_group(FinAbelianGroup({3}));
  EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const auto& g) { return witness_isomorphism(g, d3).has_value(); }));
  for (const auto& g : all) {
    const auto r = verify_axioms(g);
    EXPECT_TRUE(r.is_two_valued_group);
    EXPECT_TRUE(r.is_commutative);
  }
}

TEST(Enumerate, DeterministicOutput) {
  const auto a = enumerate_all(4, EnumerationMode::InvolutiveCommutative);
  const auto b = enumerate_all(4, EnumerationMode::InvolutiveCommutative);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].same_table(b[i]));
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    EXPECT_TRUE(std::lexicographical_compare(a[i].table().begin(), a[i].table().end(), a[i + 1].table().begin(),
                                             a[i + 1].table().end()));
  }
}

TEST(Enumerate, Limits) {
  EXPECT_THROW(enumerate_all(5, EnumerationMode::InvolutiveCommutative, 10), BudgetExceeded);
  EXPECT_THROW(enumerate_all(7, EnumerationMode::InvolutiveCommutative), BudgetExceeded);
  EXPECT_THROW(enumerate_all(0, EnumerationMode::InvolutiveCommutative), PreconditionViolated);
}

TEST(Enumerate, BudgetFromEnvironment) {
  setenv("TVG_SEARCH_BUDGET", "1234", 1);
  EXPECT_EQ(default_enumeration_budget(), 1234u);
  setenv("TVG_SEARCH_BUDGET", "junk", 1);
  EXPECT_EQ(default_enumeration_budget(), 2'000'000'000u);
  unsetenv("TVG_SEARCH_BUDGET");
  EXPECT_EQ(default_enumeration_budget(), 2'000'000'000u);
}

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "superw/combinatorics.hpp"

using namespace superw;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<Partition> partitions_up_to(int k) {
  std::vector<Partition> out;
  for (int s = 0; s <= k; ++s)
    for (auto& p : partitions_of(s)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("").size(), 0);
  EXPECT_EQ(Partition::parse("2,1").parts(), (std::vector<int>{2, 1}));
  EXPECT_EQ(Partition::parse("3,3,1").to_string(), "3,3,1");
  EXPECT_EQ(Partition{}.to_string(), "");
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,,1"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,-1"), std::invalid_argument);
}

TEST(Partition, Enumeration) {
  EXPECT_EQ(partitions_of(0).size(), 1u);
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(6).size(), 11u);
}

TEST(LittlewoodRichardson, Examples) {
  EXPECT_EQ(lr_coefficient(P({1}), P({1}), P({2})), 1);
  EXPECT_EQ(lr_coefficient(P({1}), P({1}), P({3})), 0);
  EXPECT_EQ(lr_coefficient(P({1}), P({1, 1}), P({2, 1})), 1);
  EXPECT_EQ(lr_coefficient(P({2, 1}), P({2, 1}), P({3, 2, 1})), 2);
  EXPECT_EQ(lr_coefficient(P({2}), P({1}), P({1, 1, 1})), 0);
}

TEST(LittlewoodRichardson, MatchesSchurProducts) {
  for (const auto& lam : partitions_up_to(3))
    for (const auto& mu : partitions_up_to(3)) {
      int n = std::max(lam.size() + mu.size(), 6);
      auto expansion =
          oracle::schur_expand(oracle::multiply(oracle::schur_poly(lam, n), oracle::schur_poly(mu, n)), n);
      for (const auto& nu : partitions_of(lam.size() + mu.size())) {
        long long expected = expansion.count(nu) ? expansion.at(nu) : 0;
        EXPECT_EQ(lr_coefficient(lam, mu, nu), expected)
            << lam.to_string() << " | " << mu.to_string() << " | " << nu.to_string();
      }
    }
}

TEST(LittlewoodRichardson, Symmetric) {
  for (const auto& lam : partitions_up_to(4))
    for (const auto& mu : partitions_up_to(4))
      for (const auto& nu : partitions_of(lam.size() + mu.size()))
        EXPECT_EQ(lr_coefficient(lam, mu, nu), lr_coefficient(mu, lam, nu));
}

TEST(SchurDim, Examples) {
  EXPECT_EQ(schur_dim(P({1}), 3), 3);
  EXPECT_EQ(schur_dim(P({2, 1}), 3), 8);
  EXPECT_EQ(schur_dim(P({1, 1, 1, 1}), 3), 0);
  EXPECT_EQ(schur_dim(Partition{}, 5), 1);
}

TEST(SchurDim, MatchesTableauCount) {
  for (const auto& lam : partitions_up_to(5))
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(schur_dim(lam, n), oracle::count_ssyt(lam, n)) << lam.to_string();
}

TEST(SchurDim, ProductRule) {
  for (const auto& lam : partitions_up_to(3))
    for (const auto& mu : partitions_up_to(3))
      for (int n = 1; n <= 6; ++n) {
        long long rhs = 0;
        for (const auto& nu : partitions_of(lam.size() + mu.size()))
          rhs += lr_coefficient(lam, mu, nu) * schur_dim(nu, n);
        EXPECT_EQ(schur_dim(lam, n) * schur_dim(mu, n), rhs);
      }
}

TEST(SocleLayers, Examples) {
  using M = std::map<PartitionPair, long long>;
  EXPECT_EQ(socle_layer_mults(P({1}), P({1}), 1), (M{{{Partition{}, Partition{}}, 1}}));
  EXPECT_EQ(socle_layer_mults(P({1}), P({1}), 0), (M{{{P({1}), P({1})}, 1}}));
  EXPECT_EQ(socle_layer_mults(P({2}), P({1}), 1), (M{{{P({1}), Partition{}}, 1}}));
  EXPECT_TRUE(socle_layer_mults(P({2}), P({1}), 2).empty());
}

TEST(SocleLayers, LayerZeroIsTheSocle) {
  for (const auto& lam : partitions_up_to(3))
    for (const auto& mu : partitions_up_to(3)) {
      std::map<PartitionPair, long long> expected{{{lam, mu}, 1}};
      EXPECT_EQ(socle_layer_mults(lam, mu, 0), expected);
    }
}

TEST(StableHighestWeight, Examples) {
  EXPECT_EQ(stable_highest_weight(P({1}), P({1}), OrderKind::interleaved, 4),
            Weight::epsilon(1) - Weight::epsilon(2));
  EXPECT_EQ(stable_highest_weight(P({2, 1}), Partition{}, OrderKind::natural, 3),
            Weight::epsilon(1, 2) + Weight::epsilon(2));
  EXPECT_EQ(stable_highest_weight(Partition{}, P({2}), OrderKind::natural, 4), Weight::epsilon(4, -2));
  EXPECT_EQ(stable_highest_weight(P({2, 1}), P({1}), OrderKind::natural, 5),
            Weight::epsilon(1, 2) + Weight::epsilon(2) - Weight::epsilon(5));
  EXPECT_THROW(stable_highest_weight(P({1, 1}), P({1}), OrderKind::natural, 2), RankError);
  EXPECT_THROW(stable_highest_weight(P({1, 1}), Partition{}, OrderKind::interleaved, 3), RankError);
}

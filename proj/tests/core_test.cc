// Copyright 2026 The Oracle Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <memory>
#include <vector>

#include <gtest/gtest.h>

#include "generators.h"
#include "oracle_games/errors.h"
#include "oracle_games/game.h"
#include "oracle_games/games/box_game.h"
#include "oracle_games/games/matrix_game.h"
#include "oracle_games/games/prec_game.h"
#include "oracle_games/games/tree_game.h"
#include "oracle_games/mixed_strategy.h"
#include "oracle_games/pure_response.h"
#include "reference.h"

namespace oracle_games {
namespace {

using testing::Rng;

TEST(PureResponseTest, CanonicalKeys) {
  EXPECT_EQ(PureResponse::Permutation({2, 0, 1}).key(), "perm:2,0,1");
  EXPECT_EQ(PureResponse::EdgeSequence({0, 2, 1}).key(), "edges:0,2,1");
  EXPECT_EQ(PureResponse::Subset({3, 0}).key(), "subset:0,3");
  EXPECT_EQ(PureResponse::Subset({}).key(), "subset:");
  EXPECT_EQ(PureResponse::Column(4).key(), "col:4");
}

TEST(PureResponseTest, ParseInvertsKey) {
  for (const PureResponse& r :
       {PureResponse::Permutation({2, 0, 1}), PureResponse::EdgeSequence({1}),
        PureResponse::Subset({0, 3}), PureResponse::Subset({}),
        PureResponse::Column(7)}) {
    const PureResponse parsed = PureResponse::Parse(r.key());
    EXPECT_EQ(parsed, r);
    EXPECT_EQ(parsed.kind(), r.kind());
    EXPECT_EQ(parsed.items(), r.items());
  }
}

TEST(PureResponseTest, ParseRejectsMalformedText) {
  EXPECT_THROW(PureResponse::Parse("perm"), ParseError);
  EXPECT_THROW(PureResponse::Parse("cycle:1,2"), ParseError);
  EXPECT_THROW(PureResponse::Parse("perm:1,x"), ParseError);
  EXPECT_THROW(PureResponse::Parse("perm:1,"), ParseError);
  EXPECT_THROW(PureResponse::Parse("subset:1,1"), ContractError);
  EXPECT_THROW(PureResponse::Parse("col:1,2"), ContractError);
}

TEST(PureResponseTest, EqualityFollowsKeys) {
  EXPECT_EQ(PureResponse::Subset({1, 0}), PureResponse::Subset({0, 1}));
  EXPECT_NE(PureResponse::Permutation({1, 0}), PureResponse::Permutation({0, 1}));
  EXPECT_NE(PureResponse::Permutation({0}), PureResponse::Subset({0}));
}

TEST(NormalizeTest, EqualWeights) {
  const RowStrategy x = RowStrategy::Normalize({{0, 2.0}, {1, 2.0}});
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x.entries()[0], (RowStrategy::Entry{0, 0.5}));
  EXPECT_EQ(x.entries()[1], (RowStrategy::Entry{1, 0.5}));
}

TEST(NormalizeTest, DropsZeroEntries) {
  const RowStrategy x = RowStrategy::Normalize({{0, 3.0}, {1, 0.0}});
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.entries()[0], (RowStrategy::Entry{0, 1.0}));
}

TEST(NormalizeTest, SumFourNormalization) {
  const RowStrategy x = RowStrategy::Normalize({{0, 1.0}, {1, 2.0}, {2, 1.0}});
  ASSERT_EQ(x.size(), 3u);
  EXPECT_DOUBLE_EQ(x.WeightOf(0), 0.25);
  EXPECT_DOUBLE_EQ(x.WeightOf(1), 0.5);
  EXPECT_DOUBLE_EQ(x.WeightOf(2), 0.25);
}

TEST(NormalizeTest, MergesRepeatedKeys) {
  const ColumnStrategy y = ColumnStrategy::Normalize(
      {{PureResponse::Column(1), 1.0}, {PureResponse::Column(0), 1.0},
       {PureResponse::Column(1), 2.0}});
  ASSERT_EQ(y.size(), 2u);
  EXPECT_EQ(y.entries()[0].first, PureResponse::Column(1));
  EXPECT_DOUBLE_EQ(y.entries()[0].second, 0.75);
}

TEST(NormalizeTest, RejectsInvalidWeights) {
  EXPECT_THROW(RowStrategy::Normalize({{0, 0.0}, {1, 0.0}}),
               InvalidDistributionError);
  EXPECT_THROW(RowStrategy::Normalize({{0, 1.0}, {1, -0.5}}),
               InvalidDistributionError);
  EXPECT_THROW(RowStrategy::Normalize({}), InvalidDistributionError);
  EXPECT_THROW(RowStrategy::Normalize({{0, NAN}}), InvalidDistributionError);
}

TEST(NormalizeTest, IdempotentOnRandomInput) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::UniformInt(rng, 1, 12);
    std::vector<RowStrategy::Entry> weights;
    for (int k = 0; k < 2 * n; ++k) {
      const double w =
          testing::UniformInt(rng, 0, 3) == 0 ? 0.0 : testing::UniformReal(rng, 0, 5);
      weights.emplace_back(testing::UniformInt(rng, 0, n - 1), w);
    }
    weights.emplace_back(0, 1.0);
    const RowStrategy once = RowStrategy::Normalize(weights);
    const RowStrategy twice = RowStrategy::Normalize(once.entries());
    ASSERT_EQ(once.size(), twice.size());
    double total = 0.0;
    for (std::size_t k = 0; k < once.size(); ++k) {
      EXPECT_EQ(once.entries()[k].first, twice.entries()[k].first);
      EXPECT_NEAR(once.entries()[k].second, twice.entries()[k].second, 1e-15);
      EXPECT_GT(once.entries()[k].second, 0.0);
      total += once.entries()[k].second;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(MixedStrategyTest, FromEntriesChecksInvariants) {
  EXPECT_NO_THROW(RowStrategy::FromEntries({{0, 0.25}, {2, 0.75}}));
  EXPECT_THROW(RowStrategy::FromEntries({{0, 0.5}, {0, 0.5}}),
               InvalidDistributionError);
  EXPECT_THROW(RowStrategy::FromEntries({{0, 0.5}, {1, 0.0}, {2, 0.5}}),
               InvalidDistributionError);
  EXPECT_THROW(RowStrategy::FromEntries({{0, 0.5}, {1, 0.4}}),
               InvalidDistributionError);
}

TEST(MixedStrategyTest, DenseRoundTrip) {
  const std::vector<double> dense = {0.0, 0.25, 0.0, 0.75};
  const RowStrategy x = FromDense(dense);
  EXPECT_EQ(x.size(), 2u);
  EXPECT_EQ(ToDense(x, 4), dense);
  EXPECT_THROW(ToDense(x, 3), ContractError);
  const RowStrategy u = Uniform(4);
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(u.WeightOf(i), 0.25);
}

TEST(ExpectedPayoffTest, BoxTwoTermSum) {
  const BoxGame game({1.0, 2.0});
  const RowStrategy x = RowStrategy::FromEntries({{0, 0.5}, {1, 0.5}});
  EXPECT_DOUBLE_EQ(ExpectedPayoff(game, x, PureResponse::Permutation({0, 1})),
                   2.0);
}

TEST(ExpectedPayoffTest, BoxUniformUnitCosts) {
  const BoxGame game({1.0, 1.0, 1.0});
  EXPECT_DOUBLE_EQ(
      ExpectedPayoff(game, Uniform(3), PureResponse::Permutation({0, 1, 2})),
      2.0);
}

TEST(ExpectedPayoffTest, PointMassGivesPayoff) {
  Rng rng(3);
  const MatrixGame game(testing::RandomMatrix(rng, 4, 5));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 5; ++j) {
      const PureResponse r = PureResponse::Column(j);
      EXPECT_EQ(ExpectedPayoff(game, RowStrategy::PointMass(i), r),
                game.Payoff(i, r));
    }
  }
}

TEST(ExpectedPayoffTest, MixedPointMassAndSymmetricBoxes) {
  const BoxGame game({1.0, 1.0});
  const PureResponse r = PureResponse::Permutation({1, 0});
  const RowStrategy x = RowStrategy::FromEntries({{0, 0.3}, {1, 0.7}});
  EXPECT_DOUBLE_EQ(ExpectedPayoff(game, x, ColumnStrategy::PointMass(r)),
                   ExpectedPayoff(game, x, r));
  const ColumnStrategy both = ColumnStrategy::Normalize(
      {{PureResponse::Permutation({0, 1}), 1.0}, {r, 1.0}});
  EXPECT_DOUBLE_EQ(ExpectedPayoff(game, Uniform(2), both), 1.5);
}

TEST(ExpectedPayoffTest, RejectsBadIndicesAndResponses) {
  const BoxGame game({1.0, 2.0});
  const RowStrategy outside = RowStrategy::PointMass(5);
  EXPECT_THROW(ExpectedPayoff(game, outside, PureResponse::Permutation({0, 1})),
               ContractError);
  EXPECT_THROW(ExpectedPayoff(game, Uniform(2), PureResponse::Permutation({0, 0})),
               ContractError);
  EXPECT_THROW(ExpectedPayoff(game, Uniform(2), PureResponse::Subset({0})),
               ContractError);
  EXPECT_THROW(game.BestResponseTo(outside), ContractError);
}

TEST(ExpectedPayoffTest, WorstCaseForColumn) {
  const MatrixGame game({{2.0, 1.0}, {1.0, 2.0}});
  const ColumnStrategy y = ColumnStrategy::Normalize(
      {{PureResponse::Column(0), 3.0}, {PureResponse::Column(1), 1.0}});
  EXPECT_DOUBLE_EQ(WorstCaseForColumn(game, y), 1.75);
}

TEST(BestResponseToTest, PayoffIsIndependentlyEvaluated) {
  Rng rng(5);
  const std::vector<double> costs = testing::RandomIntegerCosts(rng, 6);
  const BoxGame game(costs);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> x = testing::RandomSimplexPoint(rng, 6, true);
    const BestResponse answer = game.BestResponseTo(FromDense(x));
    EXPECT_EQ(answer.alpha, 1.0);
    EXPECT_NEAR(answer.payoff,
                testing::BoxExpectedCost(costs, x, answer.response.items()),
                1e-9 * game.max_payoff());
  }
}

// Every game family, for the linearity property.
std::vector<std::shared_ptr<const Game>> SampleGames(Rng& rng) {
  std::vector<std::shared_ptr<const Game>> games;
  games.push_back(std::make_shared<BoxGame>(testing::RandomIntegerCosts(rng, 5)));
  games.push_back(std::make_shared<MatrixGame>(testing::RandomMatrix(rng, 4, 6)));
  games.push_back(std::make_shared<PrecGame>(testing::RandomIntegerCosts(rng, 5),
                                             testing::RandomDag(rng, 5, 0.3)));
  games.push_back(std::make_shared<ExpTreeGame>(
      testing::BuildTree(testing::RandomTree(rng, 5))));
  games.push_back(std::make_shared<ExprTreeGame>(
      testing::BuildTree(testing::RandomTree(rng, 5))));
  return games;
}

TEST(ExpectedPayoffTest, LinearInRowStrategy) {
  Rng rng(17);
  for (int round = 0; round < 10; ++round) {
    for (const auto& game : SampleGames(rng)) {
      const int n = game->num_rows();
      const std::vector<double> x = testing::RandomSimplexPoint(rng, n, true);
      const std::vector<double> x2 = testing::RandomSimplexPoint(rng, n, true);
      const double lambda = testing::UniformReal(rng, 0.0, 1.0);
      std::vector<double> mix(n);
      for (int i = 0; i < n; ++i) mix[i] = lambda * x[i] + (1 - lambda) * x2[i];
      const PureResponse r = game->ComputeBestResponse(FromDense(x));
      const double lhs = ExpectedPayoff(*game, FromDense(mix), r);
      const double rhs = lambda * ExpectedPayoff(*game, FromDense(x), r) +
                         (1 - lambda) * ExpectedPayoff(*game, FromDense(x2), r);
      EXPECT_NEAR(lhs, rhs, 1e-9 * game->max_payoff()) << game->name();
    }
  }
}

TEST(GameContractTest, PayoffsBoundedByMu) {
  Rng rng(23);
  for (int round = 0; round < 10; ++round) {
    for (const auto& game : SampleGames(rng)) {
      for (const PureResponse& r : game->EnumerateResponses(100000)) {
        for (double value : game->Column(r)) {
          EXPECT_GE(value, 0.0);
          EXPECT_LE(value, game->max_payoff() * (1 + 1e-12)) << game->name();
        }
      }
    }
  }
}

}  // namespace
}  // namespace oracle_games

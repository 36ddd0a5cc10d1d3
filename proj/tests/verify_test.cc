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


#include "oracle_games/verify.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "generators.h"
#include "oracle_games/errors.h"
#include "oracle_games/games/box_game.h"
#include "oracle_games/games/hspe_game.h"
#include "oracle_games/games/matrix_game.h"
#include "oracle_games/games/prec_game.h"
#include "oracle_games/mwu_solver.h"
#include "reference.h"

namespace oracle_games {
namespace {

using testing::Rng;

double BoxValue(const std::vector<double>& c) {
  const double total = std::accumulate(c.begin(), c.end(), 0.0);
  double squares = 0.0;
  for (double v : c) squares += v * v;
  return (total * total + squares) / (2.0 * total);
}

TEST(EnumerateTest, Examples) {
  const auto box = EnumerateResponses(BoxGame({1, 2, 3}));
  EXPECT_EQ(box.size(), 6u);
  EXPECT_TRUE(std::is_sorted(box.begin(), box.end()));
  EXPECT_EQ(EnumerateResponses(PrecGame({1, 1, 1}, {{2, 0}, {0, 1}})).size(), 1u);
  EXPECT_EQ(EnumerateResponses(HspeGame({2, 3, 4}, {0.5, 0.5, 0.5}, 5)).size(), 5u);
  EXPECT_EQ(EnumerateResponses(MatrixGame(Matrix{{1, 2, 3}})).size(), 3u);
  EXPECT_THROW(EnumerateResponses(BoxGame({1, 2, 3, 4, 5}), 10), SizeError);
}

TEST(ExplicitGameTest, CellsMatchPayoffs) {
  Rng rng(1);
  const std::vector<double> c = testing::RandomIntegerCosts(rng, 5);
  const PrecGame game(c, testing::RandomDag(rng, 5, 0.3));
  const ExplicitGame full = BuildExplicitGame(game, EnumerateResponses(game));
  ASSERT_EQ(full.matrix.size(), 5u);
  const int m = full.responses.size();
  for (const auto& row : full.matrix) ASSERT_EQ(static_cast<int>(row.size()), m);
  for (int k = 0; k < 10; ++k) {
    const int i = testing::UniformInt(rng, 0, 4);
    const int j = testing::UniformInt(rng, 0, m - 1);
    EXPECT_EQ(full.matrix[i][j], game.Payoff(i, full.responses[j]));
  }
}

TEST(ExactGameSolveTest, Examples) {
  const ExactGameSolution box = ExactGameSolve(BoxGame({1, 1}));
  EXPECT_NEAR(box.value, 1.5, 1e-12);
  EXPECT_NEAR(box.x_star.WeightOf(0), 0.5, 1e-12);
  const ExactGameSolution m = ExactGameSolve(MatrixGame(Matrix{{2, 1}, {1, 2}}));
  EXPECT_NEAR(m.value, 1.5, 1e-12);
  EXPECT_NEAR(m.y_star.WeightOf(PureResponse::Column(0)), 0.5, 1e-12);
}

TEST(ExactGameSolveTest, BoxHiderIsProportionalToCost) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = testing::UniformInt(rng, 3, 6);
    const std::vector<double> c = testing::RandomIntegerCosts(rng, n);
    const ExactGameSolution exact = ExactGameSolve(BoxGame(c));
    const double total = std::accumulate(c.begin(), c.end(), 0.0);
    for (int j = 0; j < n; ++j) {
      EXPECT_NEAR(exact.x_star.WeightOf(j), c[j] / total, 1e-6);
    }
    EXPECT_NEAR(exact.value, BoxValue(c), 1e-9 * total);
  }
}

TEST(ExactGameSolveTest, TwoRowGamesMatchReference) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = testing::RandomMatrix(rng, 2, testing::UniformInt(rng, 1, 8));
    EXPECT_NEAR(ExactGameSolve(MatrixGame(a)).value, testing::TwoRowGameValue(a),
                1e-9 * 10);
  }
}

TEST(ExactGameSolveTest, ColumnOrderInvariance) {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::UniformInt(rng, 1, 6);
    const int m = testing::UniformInt(rng, 1, 8);
    const Matrix a = testing::RandomMatrix(rng, n, m);
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Matrix b(n, std::vector<double>(m));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) b[i][j] = a[i][order[j]];
    }
    EXPECT_NEAR(ExactGameSolve(MatrixGame(a)).value,
                ExactGameSolve(MatrixGame(b)).value, 1e-9 * 10);
  }
}

TEST(GuaranteeTest, ExactStrategiesHaveUnitRatios) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const PrecGame game(testing::RandomIntegerCosts(rng, 5),
                        testing::RandomDag(rng, 5, 0.3));
    const ExactGameSolution exact = ExactGameSolve(game);
    const GuaranteeReport report =
        EvaluateGuarantees(game, exact, exact.x_star, exact.y_star);
    EXPECT_NEAR(report.ratio1, 1.0, 1e-9);
    EXPECT_NEAR(report.ratio2, 1.0, 1e-9);
    EXPECT_TRUE(WeakDualityHolds(report, game.max_payoff()));
    EXPECT_NO_THROW(CheckGuarantees(game, exact.x_star, exact.y_star, 1.0, 1e-9));
  }
}

TEST(GuaranteeTest, MwuOutputPassesCheck) {
  const BoxGame game({1, 2, 3, 4});
  MwuConfig config;
  config.epsilon = 0.1;
  const MwuResult result = SolveMwu(game, config);
  const GuaranteeReport report =
      CheckGuarantees(game, result.x_hat, result.y_hat, game.alpha(), 0.1);
  EXPECT_NEAR(report.v_star, BoxValue({1, 2, 3, 4}), 1e-9);
  EXPECT_LE(report.ratio1, 1.1 + 1e-6);
  EXPECT_LE(report.ratio2, 1.1 + 1e-6);
}

TEST(GuaranteeTest, WeakDualityForArbitraryStrategies) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::UniformInt(rng, 1, 6);
    const int m = testing::UniformInt(rng, 1, 8);
    const Matrix a = testing::RandomMatrix(rng, n, m);
    const MatrixGame game(a);
    const ExactGameSolution exact = ExactGameSolve(game);
    const RowStrategy x = testing::RandomRowStrategy(rng, n, trial % 2);
    const std::vector<double> yd = testing::RandomSimplexPoint(rng, m, trial % 3);
    std::vector<ColumnStrategy::Entry> entries;
    for (int j = 0; j < m; ++j) entries.emplace_back(PureResponse::Column(j), yd[j]);
    const ColumnStrategy y = ColumnStrategy::Normalize(entries);
    const GuaranteeReport report = EvaluateGuarantees(game, exact, x, y);
    EXPECT_TRUE(WeakDualityHolds(report, game.max_payoff()));
    EXPECT_NEAR(report.player1_worst, testing::RowGuarantee(a, ToDense(x, n)), 1e-12);
    EXPECT_NEAR(report.player2_worst, testing::ColumnGuarantee(a, yd), 1e-12);
  }
}

TEST(GuaranteeTest, ViolationsCarryWitness) {
  const BoxGame game({1, 2, 3});
  const ExactGameSolution exact = ExactGameSolve(game);
  const ColumnStrategy bad_y =
      ColumnStrategy::PointMass(PureResponse::Permutation({0, 1, 2}));
  try {
    CheckGuarantees(game, exact.x_star, bad_y, 1.0, 0.1);
    FAIL();
  } catch (const GuaranteeViolation& violation) {
    EXPECT_EQ(violation.witness().rfind("y_hat=", 0), 0u);
  }
  try {
    CheckGuarantees(game, RowStrategy::PointMass(0), exact.y_star, 1.0, 0.1);
    FAIL();
  } catch (const GuaranteeViolation& violation) {
    EXPECT_EQ(violation.witness().rfind("x_hat=", 0), 0u);
  }
}

TEST(GuaranteeTest, ZeroGuaranteeGivesInfiniteRatio) {
  const MatrixGame game(Matrix{{1, 0}, {0, 1}});
  const GuaranteeReport report = EvaluateGuarantees(
      game, RowStrategy::PointMass(0),
      ColumnStrategy::PointMass(PureResponse::Column(1)));
  EXPECT_EQ(report.player1_worst, 0.0);
  EXPECT_TRUE(std::isinf(report.ratio1));
  EXPECT_NEAR(report.v_star, 0.5, 1e-12);
  EXPECT_NEAR(report.ratio2, 2.0, 1e-12);
}

}  // namespace
}  // namespace oracle_games

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

#ifndef ORACLE_GAMES_VERIFY_H_
#define ORACLE_GAMES_VERIFY_H_

#include <cstddef>
#include <vector>

#include "oracle_games/game.h"
#include "oracle_games/games/enumeration.h"
#include "oracle_games/games/matrix_game.h"
#include "oracle_games/lp_solver.h"

namespace oracle_games {

// The full payoff matrix of an enumerable game. Column j holds
// game.Payoff(i, responses[j]) exactly as evaluated.
struct ExplicitGame {
  Matrix matrix;
  std::vector<PureResponse> responses;
};

// Every pure response, deduplicated and sorted by canonical key.
std::vector<PureResponse> EnumerateResponses(
    const Game& game, std::size_t cap = kDefaultEnumerationCap);

ExplicitGame BuildExplicitGame(const Game& game,
                               std::vector<PureResponse> responses);

struct ExactGameSolution {
  ExplicitGame explicit_game;
  ExactLpSolution lp;
  RowStrategy x_star;
  ColumnStrategy y_star;
  double value = 0.0;
};

// Optimal strategies and value from the LP over the full enumeration.
ExactGameSolution ExactGameSolve(const Game& game,
                                 std::size_t cap = kDefaultEnumerationCap);

struct GuaranteeReport {
  double v_star = 0.0;
  double player1_worst = 0.0;  // min_j C(x_hat, j)
  double player2_worst = 0.0;  // max_i C(i, y_hat)
  double ratio1 = 0.0;         // v_star / player1_worst
  double ratio2 = 0.0;         // player2_worst / v_star
};

// Measures both strategies against the full enumeration. v_star is taken from
// the exact solve.
GuaranteeReport EvaluateGuarantees(const Game& game, const RowStrategy& x_hat,
                                   const ColumnStrategy& y_hat,
                                   std::size_t cap = kDefaultEnumerationCap);

// Same measurement against an already solved game.
GuaranteeReport EvaluateGuarantees(const Game& game,
                                   const ExactGameSolution& exact,
                                   const RowStrategy& x_hat,
                                   const ColumnStrategy& y_hat);

// player1_worst <= v_star <= player2_worst up to tolerance * mu.
bool WeakDualityHolds(const GuaranteeReport& report, double mu,
                      double tolerance = kDefaultTolerance);

// Throws GuaranteeViolation when ratio1 exceeds bound1 or ratio2 exceeds
// bound2. An infinite bound disables that check.
void RequireRatios(const GuaranteeReport& report, double bound1,
                   double bound2, const RowStrategy& x_hat,
                   const ColumnStrategy& y_hat);

void RequireRatios(const GuaranteeReport& report, double bound,
                   const RowStrategy& x_hat, const ColumnStrategy& y_hat);

// EvaluateGuarantees followed by RequireRatios with bound
// alpha (1 + epsilon) + 1e-6.
GuaranteeReport CheckGuarantees(const Game& game, const RowStrategy& x_hat,
                                const ColumnStrategy& y_hat, double alpha,
                                double epsilon,
                                std::size_t cap = kDefaultEnumerationCap);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_VERIFY_H_

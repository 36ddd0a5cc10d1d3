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
#ifndef ORACLE_GAMES_MWU_SOLVER_H_
#define ORACLE_GAMES_MWU_SOLVER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oracle_games/game.h"

namespace oracle_games {

// Which player's guarantee fixes delta. kBoth uses the row player's
// (smaller) delta, which also yields the column player's guarantee.
enum class MwuMode { kPlayerOne, kPlayerTwo, kBoth };

struct MwuConfig {
  double epsilon = 0.1;
  MwuMode mode = MwuMode::kBoth;
  // Safety valve; defaults to the iteration bound.
  std::optional<std::int64_t> iteration_cap;
  bool record_history = false;
};

struct MwuParams {
  double eta = 0.0;        // (sqrt(1 + epsilon) - 1) / 2
  double delta_log = 0.0;  // ln(delta); delta itself underflows for small eta
  int n = 0;

  // Run stops once log f(t) exceeds this, i.e. f(t) > 1 / (delta n).
  double StopThreshold() const;
};

// Throws ConfigError for n < 1, epsilon outside (0, 8) (eta must stay below
// one), or alpha < 1.
MwuParams ComputeMwuParams(int n, double epsilon, double alpha, MwuMode mode);

// floor(n (1 - ln(delta) / ln(1 + eta))): no run can take more iterations.
std::int64_t IterationBound(const MwuParams& params);

struct MwuRound {
  PureResponse response;
  double column_max = 0.0;  // M(t) = max_i C(i, j(t))
  double payoff = 0.0;      // C(x(t), j(t))
  double log_f = 0.0;       // log f(t) after this round
};

// Solver state between rounds. x holds the strategy to play next.
struct MwuState {
  std::int64_t t = 0;  // completed rounds
  std::vector<double> x;
  double log_f = 0.0;
  std::vector<MwuRound> history;  // filled only when recording

  // Best round so far (largest C(x(t), j(t)), earliest on ties).
  std::int64_t best_round = 0;
  double best_payoff = -1.0;
  std::vector<double> best_x;

  // Distinct responses seen, their cached columns and sum of 1/M(t).
  std::vector<PureResponse> responses;
  std::vector<std::vector<double>> columns;
  std::vector<double> inverse_max_sum;
  std::map<std::string, std::size_t> response_index;
};

MwuState InitialMwuState(int n);

// One round: oracle query, M(t) from the full column, multiplicative update
// with renormalization, log f bookkeeping. Throws DegenerateColumnError if
// the oracle's column is all zero and OracleContractError if it pays zero
// against x(t).
void MwuStep(const Game& game, const MwuParams& params, MwuState& state,
             bool record_history = false);

struct MwuResult {
  RowStrategy x_hat;
  ColumnStrategy y_hat;
  double lower_bound = 0.0;            // max_t C(x(t), j(t)) / alpha
  double upper_bound_empirical = 0.0;  // max_i C(i, y_hat)
  std::int64_t iterations = 0;
  std::int64_t iteration_bound = 0;
  std::int64_t best_round = 0;         // 1-based round that produced x_hat
  double log_f = 0.0;
  MwuParams params;
  std::vector<MwuRound> history;
};

// Runs rounds from the uniform strategy until the stopping rule fires.
// Throws InternalError if the cap is hit first or the iteration count
// exceeds the bound.
MwuResult SolveMwu(const Game& game, const MwuConfig& config);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_MWU_SOLVER_H_

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
#include "oracle_games/mwu_solver.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "oracle_games/errors.h"

namespace oracle_games {

double MwuParams::StopThreshold() const {
  return -(delta_log + std::log(static_cast<double>(n)));
}

MwuParams ComputeMwuParams(int n, double epsilon, double alpha, MwuMode mode) {
  if (n < 1) throw ConfigError("game needs at least one row");
  if (!(epsilon > 0.0) || !(epsilon < 8.0)) {
    throw ConfigError("epsilon must lie in (0, 8), got " +
                      std::to_string(epsilon));
  }
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) {
    throw ConfigError("oracle alpha must be >= 1");
  }
  MwuParams params;
  params.n = n;
  params.eta = (std::sqrt(1.0 + epsilon) - 1.0) / 2.0;
  const double log_n = std::log(static_cast<double>(n));
  if (mode == MwuMode::kPlayerTwo) {
    params.delta_log = -log_n / params.eta;
  } else {
    params.delta_log = -(1.0 + alpha / params.eta) * log_n;
  }
  return params;
}

std::int64_t IterationBound(const MwuParams& params) {
  const double bound =
      params.n * (1.0 - params.delta_log / std::log1p(params.eta));
  return static_cast<std::int64_t>(std::floor(bound + 1e-9));
}

MwuState InitialMwuState(int n) {
  MwuState state;
  state.x.assign(n, 1.0 / n);
  return state;
}

void MwuStep(const Game& game, const MwuParams& params, MwuState& state,
             bool record_history) {
  const int n = params.n;
  if (game.num_rows() != n || static_cast<int>(state.x.size()) != n) {
    throw ContractError("solver state does not match the game");
  }
  PureResponse response = game.ComputeBestResponse(FromDense(state.x));
  std::vector<double> column = game.Column(response);

  const double column_max = *std::max_element(column.begin(), column.end());
  if (!(column_max > 0.0)) {
    throw DegenerateColumnError("oracle returned all-zero column " +
                                response.key());
  }
  double payoff = 0.0;
  for (int i = 0; i < n; ++i) payoff += state.x[i] * column[i];
  if (!(payoff > 0.0)) {
    throw OracleContractError("oracle response " + response.key() +
                              " pays zero against the current strategy");
  }
  payoff = std::min(payoff, column_max);

  ++state.t;
  if (payoff > state.best_payoff) {
    state.best_payoff = payoff;
    state.best_round = state.t;
    state.best_x = state.x;
  }

  const double gain = params.eta * payoff / column_max;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    state.x[i] *= (1.0 + params.eta * column[i] / column_max) / (1.0 + gain);
    total += state.x[i];
  }
  for (double& v : state.x) v /= total;
  state.log_f += std::log1p(gain);

  if (record_history) {
    state.history.push_back(MwuRound{response, column_max, payoff, state.log_f});
  }
  auto [it, inserted] =
      state.response_index.try_emplace(response.key(), state.responses.size());
  if (inserted) {
    state.responses.push_back(std::move(response));
    state.columns.push_back(std::move(column));
    state.inverse_max_sum.push_back(0.0);
  }
  state.inverse_max_sum[it->second] += 1.0 / column_max;
}

MwuResult SolveMwu(const Game& game, const MwuConfig& config) {
  const double alpha = game.alpha();
  const MwuParams params =
      ComputeMwuParams(game.num_rows(), config.epsilon, alpha, config.mode);
  const std::int64_t bound = IterationBound(params);
  const std::int64_t cap = config.iteration_cap.value_or(bound);
  const double threshold = params.StopThreshold();

  MwuState state = InitialMwuState(params.n);
  while (!(state.log_f > threshold)) {
    if (state.t >= cap) {
      throw InternalError("MWU reached its iteration cap " +
                          std::to_string(cap) + " before stopping");
    }
    MwuStep(game, params, state, config.record_history);
  }
  if (state.t > bound) {
    throw InternalError("MWU took " + std::to_string(state.t) +
                        " iterations, above the bound " + std::to_string(bound));
  }

  MwuResult result;
  result.params = params;
  result.iterations = state.t;
  result.iteration_bound = bound;
  result.best_round = state.best_round;
  result.log_f = state.log_f;
  result.x_hat = FromDense(state.best_x);
  result.lower_bound = state.best_payoff / alpha;

  std::vector<ColumnStrategy::Entry> weights;
  for (std::size_t k = 0; k < state.responses.size(); ++k) {
    weights.emplace_back(state.responses[k], state.inverse_max_sum[k]);
  }
  result.y_hat = ColumnStrategy::Normalize(weights);
  // y_hat entries follow first-appearance order, matching state.columns.
  std::vector<double> mixed(params.n, 0.0);
  for (const auto& [response, weight] : result.y_hat.entries()) {
    const auto& column = state.columns[state.response_index.at(response.key())];
    for (int i = 0; i < params.n; ++i) mixed[i] += weight * column[i];
  }
  result.upper_bound_empirical = *std::max_element(mixed.begin(), mixed.end());
  result.history = std::move(state.history);
  return result;
}

}  // namespace oracle_games

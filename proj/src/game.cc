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

#include "oracle_games/game.h"

#include <algorithm>
#include <string>

#include "oracle_games/errors.h"

namespace oracle_games {

std::vector<double> Game::Column(const PureResponse& response) const {
  std::vector<double> column(num_rows());
  for (int i = 0; i < num_rows(); ++i) column[i] = Payoff(i, response);
  return column;
}

std::vector<PureResponse> Game::EnumerateResponses(std::size_t) const {
  throw SizeError(name() + " does not support enumeration", std::nullopt);
}

BestResponse Game::BestResponseTo(const RowStrategy& x) const {
  CheckStrategy(x);
  BestResponse result{ComputeBestResponse(x), 0.0, alpha()};
  result.payoff = ExpectedPayoff(*this, x, result.response);
  return result;
}

void Game::CheckRow(int row) const {
  if (row < 0 || row >= num_rows()) {
    throw ContractError("row " + std::to_string(row) + " outside [0, " +
                        std::to_string(num_rows()) + ")");
  }
}

void Game::CheckStrategy(const RowStrategy& x) const {
  if (x.empty()) throw InvalidDistributionError("empty row strategy");
  for (const auto& entry : x.entries()) CheckRow(entry.first);
}

double ExpectedPayoff(const Game& game, const RowStrategy& x,
                      const PureResponse& response) {
  const std::vector<double> column = game.Column(response);
  double total = 0.0;
  for (const auto& [index, weight] : x.entries()) {
    if (index < 0 || index >= game.num_rows()) {
      throw ContractError("strategy index " + std::to_string(index) +
                          " outside the game");
    }
    total += weight * column[index];
  }
  return total;
}

double ExpectedPayoff(const Game& game, const RowStrategy& x,
                      const ColumnStrategy& y) {
  double total = 0.0;
  for (const auto& [response, weight] : y.entries()) {
    total += weight * ExpectedPayoff(game, x, response);
  }
  return total;
}

double WorstCaseForColumn(const Game& game, const ColumnStrategy& y) {
  std::vector<double> mixed(game.num_rows(), 0.0);
  for (const auto& [response, weight] : y.entries()) {
    const std::vector<double> column = game.Column(response);
    for (int i = 0; i < game.num_rows(); ++i) mixed[i] += weight * column[i];
  }
  return *std::max_element(mixed.begin(), mixed.end());
}

}  // namespace oracle_games

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
#include "oracle_games/games/box_game.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracle_games/errors.h"
#include "oracle_games/games/enumeration.h"

namespace oracle_games {

void ValidateCosts(std::span<const double> costs) {
  if (costs.empty()) throw ConfigError("at least one location is required");
  for (double c : costs) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw ConfigError("costs must be finite and positive");
    }
  }
}

double BoxPayoff(std::span<const double> costs, int box,
                 const std::vector<int>& order) {
  const int n = costs.size();
  CheckPermutation(order, n);
  if (box < 0 || box >= n) throw ContractError("box index out of range");
  double total = 0.0;
  for (int opened : order) {
    total += costs[opened];
    if (opened == box) break;
  }
  return total;
}

std::vector<double> BoxColumn(std::span<const double> costs,
                              const std::vector<int>& order) {
  CheckPermutation(order, costs.size());
  std::vector<double> column(costs.size());
  double total = 0.0;
  for (int opened : order) {
    total += costs[opened];
    column[opened] = total;
  }
  return column;
}

std::vector<int> SmithOrder(std::span<const double> weights,
                            std::span<const double> costs) {
  std::vector<int> order(costs.size());
  std::iota(order.begin(), order.end(), 0);
  // Cross-multiplied ratios keep the comparison exact for equal indices.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[a] * costs[b] > weights[b] * costs[a];
  });
  return order;
}

BoxGame::BoxGame(std::vector<double> costs) : costs_(std::move(costs)) {
  ValidateCosts(costs_);
  total_cost_ = std::accumulate(costs_.begin(), costs_.end(), 0.0);
}

const std::vector<int>& BoxGame::CheckedOrder(
    const PureResponse& response) const {
  if (response.kind() != ResponseKind::kPermutation) {
    throw ContractError("box game expects a permutation, got " +
                        response.key());
  }
  return response.items();
}

double BoxGame::Payoff(int row, const PureResponse& response) const {
  CheckRow(row);
  return BoxPayoff(costs_, row, CheckedOrder(response));
}

std::vector<double> BoxGame::Column(const PureResponse& response) const {
  return BoxColumn(costs_, CheckedOrder(response));
}

PureResponse BoxGame::ComputeBestResponse(const RowStrategy& x) const {
  return PureResponse::Permutation(SmithOrder(ToDense(x, num_rows()), costs_));
}

std::vector<PureResponse> BoxGame::EnumerateResponses(std::size_t cap) const {
  std::vector<PureResponse> out;
  for (auto& order : AllPermutations(num_rows(), cap)) {
    out.push_back(PureResponse::Permutation(std::move(order)));
  }
  return out;
}

}  // namespace oracle_games

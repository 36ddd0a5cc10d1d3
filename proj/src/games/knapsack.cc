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
#include "oracle_games/games/knapsack.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oracle_games/errors.h"

namespace oracle_games {

std::vector<int> KnapsackFptas(std::span<const double> profits,
                               std::span<const double> costs, double budget,
                               double epsilon) {
  if (profits.size() != costs.size()) {
    throw ContractError("knapsack profits and costs differ in length");
  }
  if (!(epsilon > 0.0)) throw ConfigError("knapsack epsilon must be positive");
  if (!(budget > 0.0)) throw ConfigError("knapsack budget must be positive");
  const int n = profits.size();

  std::vector<int> items;
  double max_profit = 0.0;
  for (int j = 0; j < n; ++j) {
    if (profits[j] < 0.0 || !(costs[j] > 0.0)) {
      throw ContractError("knapsack needs profits >= 0 and costs > 0");
    }
    if (costs[j] <= budget) {
      items.push_back(j);
      max_profit = std::max(max_profit, profits[j]);
    }
  }

  std::vector<bool> chosen(n, false);
  if (max_profit > 0.0) {
    const int m = items.size();
    const double scale = epsilon / (1.0 + epsilon) * max_profit / m;
    std::vector<int> scaled(m);
    int total = 0;
    for (int k = 0; k < m; ++k) {
      scaled[k] = static_cast<int>(std::floor(profits[items[k]] / scale));
      total += scaled[k];
    }
    // cheapest[k][p]: least cost reaching scaled profit exactly p with the
    // first k items.
    constexpr double kUnreachable = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> cheapest(
        m + 1, std::vector<double>(total + 1, kUnreachable));
    cheapest[0][0] = 0.0;
    for (int k = 0; k < m; ++k) {
      const double cost = costs[items[k]];
      const auto& prev = cheapest[k];
      auto& next = cheapest[k + 1];
      for (int p = 0; p <= total; ++p) {
        next[p] = prev[p];
        if (p >= scaled[k] && prev[p - scaled[k]] + cost < next[p]) {
          next[p] = prev[p - scaled[k]] + cost;
        }
      }
    }
    int target = total;
    while (cheapest[m][target] > budget) --target;
    for (int k = m; k > 0; --k) {
      if (cheapest[k][target] != cheapest[k - 1][target]) {
        chosen[items[k - 1]] = true;
        target -= scaled[k - 1];
      }
    }
  }

  double spent = 0.0;
  for (int j = 0; j < n; ++j) {
    if (chosen[j]) spent += costs[j];
  }
  for (int j = 0; j < n; ++j) {
    if (!chosen[j] && profits[j] > 0.0 && spent + costs[j] <= budget) {
      chosen[j] = true;
      spent += costs[j];
    }
  }
  std::vector<int> subset;
  for (int j = 0; j < n; ++j) {
    if (chosen[j]) subset.push_back(j);
  }
  return subset;
}

}  // namespace oracle_games

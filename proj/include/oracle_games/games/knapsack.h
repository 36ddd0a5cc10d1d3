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
#ifndef ORACLE_GAMES_GAMES_KNAPSACK_H_
#define ORACLE_GAMES_GAMES_KNAPSACK_H_

#include <span>
#include <vector>

namespace oracle_games {

// 0/1 knapsack by profit scaling. Returns a sorted item subset S with
// cost(S) <= budget and profit(S) >= OPT / (1 + epsilon).
//
// Items that do not fit alone are discarded, profits are floored to
// multiples of K = epsilon / (1 + epsilon) * max_profit / n, and a dynamic
// program over scaled profit finds the cheapest set for each profit level.
// Leftover items with positive profit that still fit are then added in index
// order, so a budget covering everything returns every such item.
std::vector<int> KnapsackFptas(std::span<const double> profits,
                               std::span<const double> costs, double budget,
                               double epsilon);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_KNAPSACK_H_

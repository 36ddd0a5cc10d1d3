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
#ifndef ORACLE_GAMES_GAMES_BOX_GAME_H_
#define ORACLE_GAMES_GAMES_BOX_GAME_H_

#include <span>
#include <string>
#include <vector>

#include "oracle_games/game.h"

namespace oracle_games {

// Search cost of finding the object in 'box' when boxes are opened in
// 'order': the prefix sum of costs through that box.
double BoxPayoff(std::span<const double> costs, int box,
                 const std::vector<int>& order);

// Column of search costs for every box under one order.
std::vector<double> BoxColumn(std::span<const double> costs,
                              const std::vector<int>& order);

// Smith's rule: open boxes in non-increasing order of weight/cost, ties by
// ascending index. Minimizes sum_j weight_j * (cost of the prefix through j).
std::vector<int> SmithOrder(std::span<const double> weights,
                            std::span<const double> costs);

// An object is hidden in one of n boxes with positive opening costs; the
// Searcher picks an order. Payoff is the total cost spent up to and
// including the box holding the object.
class BoxGame : public Game {
 public:
  explicit BoxGame(std::vector<double> costs);

  std::string name() const override { return "box"; }
  int num_rows() const override { return costs_.size(); }
  double max_payoff() const override { return total_cost_; }
  double alpha() const override { return 1.0; }
  double Payoff(int row, const PureResponse& response) const override;
  std::vector<double> Column(const PureResponse& response) const override;
  PureResponse ComputeBestResponse(const RowStrategy& x) const override;
  std::vector<PureResponse> EnumerateResponses(std::size_t cap) const override;

  const std::vector<double>& costs() const { return costs_; }

 private:
  const std::vector<int>& CheckedOrder(const PureResponse& response) const;

  std::vector<double> costs_;
  double total_cost_ = 0.0;
};

// Throws ConfigError unless every cost is finite and positive.
void ValidateCosts(std::span<const double> costs);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_BOX_GAME_H_

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
#ifndef ORACLE_GAMES_GAMES_HSPE_GAME_H_
#define ORACLE_GAMES_GAMES_HSPE_GAME_H_

#include <cstdint>
#include <string>
#include <vector>

#include "oracle_games/game.h"

namespace oracle_games {

// Hide-seek and pursuit-evasion with search costs. The Searcher inspects a
// set of locations within budget; a Hider found at j is captured with
// probability p_j.
//
// Solvers see the escape form 1 - p_j [j in S], so that the Hider is the
// maximizing row player. The capture form is available separately.
class HspeGame : public Game {
 public:
  HspeGame(std::vector<double> costs, std::vector<double> capture,
           double budget, double oracle_epsilon = 0.01);

  std::string name() const override { return "hspe"; }
  int num_rows() const override { return costs_.size(); }
  double max_payoff() const override { return 1.0; }
  // Nominal factor of the knapsack oracle. The escape-form gap is additive,
  // so this is a label for reporting, not a proven bound.
  double alpha() const override { return 1.0 + oracle_epsilon_; }
  double Payoff(int row, const PureResponse& response) const override;
  std::vector<double> Column(const PureResponse& response) const override;
  // Knapsack FPTAS on profits p_j x_j.
  PureResponse ComputeBestResponse(const RowStrategy& x) const override;
  // All subsets within budget (including the empty set).
  std::vector<PureResponse> EnumerateResponses(std::size_t cap) const override;

  // p_j if j in S, else 0.
  double CapturePayoff(int row, const PureResponse& response) const;
  bool IsAffordable(const std::vector<int>& subset) const;

  const std::vector<double>& costs() const { return costs_; }
  const std::vector<double>& capture() const { return capture_; }
  double budget() const { return budget_; }
  double oracle_epsilon() const { return oracle_epsilon_; }

 private:
  const std::vector<int>& CheckedSubset(const PureResponse& response) const;

  std::vector<double> costs_;
  std::vector<double> capture_;
  double budget_;
  double oracle_epsilon_;
};

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_HSPE_GAME_H_

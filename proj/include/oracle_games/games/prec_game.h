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
#ifndef ORACLE_GAMES_GAMES_PREC_GAME_H_
#define ORACLE_GAMES_GAMES_PREC_GAME_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oracle_games/game.h"

namespace oracle_games {

// Precedence pair (before, after): 'before' must be searched first.
using PrecedenceEdge = std::pair<int, int>;

// predecessors[v] from an edge list. Throws ConfigError on out-of-range
// endpoints, self loops or cycles.
std::vector<std::vector<int>> BuildPredecessors(
    int n, const std::vector<PrecedenceEdge>& edges);

// Among the jobs flagged in 'remaining', the nonempty set S, closed under
// predecessors within 'remaining', that maximizes weight(S)/cost(S). Ties go
// to the largest such set. Sorted ascending.
//
// Dinkelbach iteration on the density; each step maximizes
// weight(S) - lambda * cost(S) over closed sets with one min cut.
std::vector<int> MaxDensityClosure(
    std::span<const double> weights, std::span<const double> costs,
    const std::vector<std::vector<int>>& predecessors,
    const std::vector<bool>& remaining);

// Sidney decomposition: peel off max-density closures and schedule each
// block in precedence order (ascending index among ready jobs). Any such
// schedule is within a factor 2 of optimal for 1|prec|sum w_j C_j.
std::vector<int> SidneyOrder(std::span<const double> weights,
                             std::span<const double> costs,
                             const std::vector<std::vector<int>>& predecessors);

// BOX restricted to search orders that respect a partial order on the boxes.
class PrecGame : public Game {
 public:
  PrecGame(std::vector<double> costs, std::vector<PrecedenceEdge> edges);

  std::string name() const override { return "prec"; }
  int num_rows() const override { return costs_.size(); }
  double max_payoff() const override { return total_cost_; }
  double alpha() const override { return 2.0; }
  double Payoff(int row, const PureResponse& response) const override;
  std::vector<double> Column(const PureResponse& response) const override;
  PureResponse ComputeBestResponse(const RowStrategy& x) const override;
  std::vector<PureResponse> EnumerateResponses(std::size_t cap) const override;

  bool IsLinearExtension(const std::vector<int>& order) const;

  const std::vector<double>& costs() const { return costs_; }
  const std::vector<PrecedenceEdge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& predecessors() const {
    return predecessors_;
  }

 private:
  const std::vector<int>& CheckedOrder(const PureResponse& response) const;

  std::vector<double> costs_;
  std::vector<PrecedenceEdge> edges_;
  std::vector<std::vector<int>> predecessors_;
  double total_cost_ = 0.0;
};

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_PREC_GAME_H_

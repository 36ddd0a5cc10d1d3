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
#ifndef ORACLE_GAMES_GAMES_REGRET_GAME_H_
#define ORACLE_GAMES_GAMES_REGRET_GAME_H_

#include <memory>
#include <string>
#include <vector>

#include "oracle_games/game.h"

namespace oracle_games {

// Row-reweighted version of another game: C'(i, j) = k_i C(i, j).
//
// The oracle asks the base oracle about normalize(k_i x_i), which has the
// same minimizers as C'(x, .) up to a positive constant, so the guarantee
// factor carries over unchanged.
class RegretGame : public Game {
 public:
  // Throws ConfigError unless there is one strictly positive weight per row.
  RegretGame(std::shared_ptr<const Game> base, std::vector<double> weights);

  std::string name() const override { return "regret(" + base_->name() + ")"; }
  int num_rows() const override { return base_->num_rows(); }
  double max_payoff() const override { return max_payoff_; }
  double alpha() const override { return base_->alpha(); }
  double Payoff(int row, const PureResponse& response) const override;
  std::vector<double> Column(const PureResponse& response) const override;
  PureResponse ComputeBestResponse(const RowStrategy& x) const override;
  std::vector<PureResponse> EnumerateResponses(std::size_t cap) const override;

  // The query handed to the base oracle for x.
  RowStrategy ReweightedQuery(const RowStrategy& x) const;

  const Game& base() const { return *base_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::shared_ptr<const Game> base_;
  std::vector<double> weights_;
  double max_payoff_ = 0.0;
};

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_REGRET_GAME_H_

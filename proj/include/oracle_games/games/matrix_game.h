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
#ifndef ORACLE_GAMES_GAMES_MATRIX_GAME_H_
#define ORACLE_GAMES_GAMES_MATRIX_GAME_H_

#include <string>
#include <vector>

#include "oracle_games/game.h"

namespace oracle_games {

// Row-major dense payoff matrix.
using Matrix = std::vector<std::vector<double>>;

// A game given by an explicit nonnegative matrix; responses are column
// indices and the oracle scans every column (exact, ties to the lowest index).
class MatrixGame : public Game {
 public:
  explicit MatrixGame(Matrix payoffs);

  std::string name() const override { return "matrix"; }
  int num_rows() const override { return payoffs_.size(); }
  int num_columns() const { return payoffs_.front().size(); }
  double max_payoff() const override { return max_payoff_; }
  double alpha() const override { return 1.0; }
  double Payoff(int row, const PureResponse& response) const override;
  std::vector<double> Column(const PureResponse& response) const override;
  PureResponse ComputeBestResponse(const RowStrategy& x) const override;
  std::vector<PureResponse> EnumerateResponses(std::size_t cap) const override;

  const Matrix& payoffs() const { return payoffs_; }

 private:
  int CheckedColumn(const PureResponse& response) const;

  Matrix payoffs_;
  double max_payoff_ = 0.0;
};

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_MATRIX_GAME_H_

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

#ifndef ORACLE_GAMES_GAME_H_
#define ORACLE_GAMES_GAME_H_

#include <cstddef>
#include <string>
#include <vector>

#include "oracle_games/mixed_strategy.h"
#include "oracle_games/pure_response.h"

namespace oracle_games {

// Payoff comparisons are made relative to the game's payoff bound mu.
inline constexpr double kDefaultTolerance = 1e-9;

struct BestResponse {
  PureResponse response;
  double payoff = 0.0;  // C(x, response) for the queried x
  double alpha = 1.0;   // guarantee factor of the oracle that produced it
};

// A zero-sum game in which the maximizing row player has n pure strategies
// and the minimizing column player has a (typically exponential) family of
// pure responses, reachable only through a best-response oracle.
//
// Implementations are immutable after construction. Constructors validate
// that mu > 0 and that the game value is strictly positive.
class Game {
 public:
  virtual ~Game() = default;

  virtual std::string name() const = 0;
  virtual int num_rows() const = 0;
  // Upper bound on every payoff the game can produce.
  virtual double max_payoff() const = 0;
  // Approximation factor of ComputeBestResponse.
  virtual double alpha() const = 0;

  // A[row, response]. Throws ContractError on a bad row or response.
  virtual double Payoff(int row, const PureResponse& response) const = 0;

  // The full column A[., response]. The default calls Payoff per row.
  virtual std::vector<double> Column(const PureResponse& response) const;

  // A response whose expected payoff against x is at most alpha() times the
  // minimum over all responses.
  virtual PureResponse ComputeBestResponse(const RowStrategy& x) const = 0;

  // Every pure response, without duplicates. Throws SizeError when the
  // family is larger than cap or the game cannot enumerate it.
  virtual std::vector<PureResponse> EnumerateResponses(std::size_t cap) const;

  // Oracle call plus an independent evaluation of the payoff.
  BestResponse BestResponseTo(const RowStrategy& x) const;

 protected:
  void CheckRow(int row) const;
  void CheckStrategy(const RowStrategy& x) const;
};

// sum_i x_i A[i, response].
double ExpectedPayoff(const Game& game, const RowStrategy& x,
                      const PureResponse& response);

// Bilinear extension sum_j y_j C(x, j).
double ExpectedPayoff(const Game& game, const RowStrategy& x,
                      const ColumnStrategy& y);

// max_i C(i, y): what y concedes against the best pure row.
double WorstCaseForColumn(const Game& game, const ColumnStrategy& y);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAME_H_

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
#ifndef ORACLE_GAMES_GAMES_SUB_GAME_H_
#define ORACLE_GAMES_GAMES_SUB_GAME_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oracle_games/game.h"

namespace oracle_games {

// Set function over subsets of [0, n), subsets encoded as bit masks.
using SetFunction = std::function<double(std::uint32_t)>;

inline constexpr int kMaxSubRows = 16;
// Up to this size the set function is checked exhaustively at construction;
// above it a fixed-seed sample of triples is checked instead.
inline constexpr int kExhaustiveSubmodularCheckRows = 12;

// Searcher picks an order; payoff is the set-function cost of everything
// searched up to and including the Hider's location.
//
// The built-in oracle is exact: a dynamic program over subsets (2^n * n),
// which is the desk-scale stand-in for the 2-approximation of the literature.
class SubGame : public Game {
 public:
  SubGame(int n, SetFunction cost);
  // values[mask] = f(mask); size must be 2^n.
  static SubGame Tabulated(int n, std::vector<double> values);

  std::string name() const override { return "sub"; }
  int num_rows() const override { return n_; }
  double max_payoff() const override { return table_.back(); }
  double alpha() const override { return 1.0; }
  double Payoff(int row, const PureResponse& response) const override;
  std::vector<double> Column(const PureResponse& response) const override;
  PureResponse ComputeBestResponse(const RowStrategy& x) const override;
  std::vector<PureResponse> EnumerateResponses(std::size_t cap) const override;

  double SetCost(std::uint32_t mask) const { return table_[mask]; }
  const std::vector<double>& table() const { return table_; }

 private:
  const std::vector<int>& CheckedOrder(const PureResponse& response) const;

  int n_;
  std::vector<double> table_;
};

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_SUB_GAME_H_

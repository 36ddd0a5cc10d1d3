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
#ifndef ORACLE_GAMES_LP_SOLVER_H_
#define ORACLE_GAMES_LP_SOLVER_H_

#include <vector>

#include "oracle_games/games/matrix_game.h"
#include "oracle_games/mixed_strategy.h"

namespace oracle_games {

// Optimal strategies of an explicit matrix game, rows maximizing.
struct ExactLpSolution {
  RowStrategy x_star;                // over rows
  MixedStrategy<int> y_star;         // over column indices
  double value = 0.0;                // simplex objective mapped back
  double primal_value = 0.0;         // min_j sum_i x*_i A[i][j]
  double dual_value = 0.0;           // max_i sum_j A[i][j] y*_j
  int pivots = 0;
};

// Solves
//   max V  s.t.  sum_i x_i A[i][j] >= V for all j, x in the simplex
// and its dual with a dense tableau simplex.
//
// Payoffs are mapped to A / mu + 1 (entries in [1, 2]); the column player's
// problem then becomes the packing LP max 1'y s.t. A'y <= 1, y >= 0, whose
// slack basis is feasible from the start. Row strategies are read off the
// slack reduced costs. Dantzig pricing, switching to Bland's rule after a run
// of degenerate pivots.
//
// Requires a nonempty matrix with finite entries >= 0 and at least one
// positive entry. Throws NumericalError if the pivot guard trips.
ExactLpSolution SolveMatrixGame(const Matrix& payoffs);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_LP_SOLVER_H_

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

#ifndef ORACLE_GAMES_ELLIPSOID_SOLVER_H_
#define ORACLE_GAMES_ELLIPSOID_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "oracle_games/game.h"
#include "oracle_games/lp_solver.h"

namespace oracle_games {

// The constraint sum_i x_i A[i, response] >= V for one discovered response.
struct ColumnConstraint {
  PureResponse response;
  std::vector<double> column;
};

// Valid inequality normal . x >= offset violated by the queried point.
struct Halfspace {
  std::vector<double> normal;
  double offset = 0.0;
};

struct SeparationOutcome {
  bool feasible = false;
  // Set when a simplex constraint (sum to one, nonnegativity) failed.
  std::optional<Halfspace> simplex_cut;
  // Set when the oracle's response pays less than v against x.
  std::optional<ColumnConstraint> column_cut;
};

struct EllipsoidConfig {
  // Grid step; defaults to 1e-4 * mu.
  std::optional<double> gamma;
  // Per-test stop: declare P(v) empty once the log volume (relative to the
  // unit ball) drops below this. Defaults to d ln r, with r the radius of
  // a ball that a nonempty slackened P(v) is guaranteed to contain.
  std::optional<double> min_log_volume;
  // Per-test iteration cap; defaults to ceil(2 d (d + 1) ln(R / r)).
  std::optional<std::int64_t> iteration_cap;
  double feasibility_slack = 0.0;
};

// Approximate separation for the LP "x in simplex, x . A_j >= v for all j".
// Simplex constraints are checked first (sum within max(slack, 1e-12),
// entries >= -slack). Otherwise the oracle is queried on x clipped to the
// simplex, and its column is returned if x . A_j* < v. A "feasible" answer may
// be wrong by the oracle's factor alpha.
SeparationOutcome ApproximateSeparation(const Game& game,
                                        const std::vector<double>& x, double v,
                                        double feasibility_slack = 0.0);

struct FeasibilityResult {
  bool feasible = false;
  std::vector<double> point;  // dense strategy, when feasible
  std::vector<ColumnConstraint> constraints;
  std::int64_t iterations = 0;
};

// Central-cut ellipsoid method on {x in simplex : x . A_j >= v - gamma/2},
// run in the n - 1 coordinates left after eliminating x_n. Starts from the
// ball of radius sqrt(n) around the uniform strategy. Throws NumericalError
// if the shape matrix loses positive definiteness.
FeasibilityResult EllipsoidFeasibility(const Game& game, double v,
                                       const EllipsoidConfig& config);

struct GridProbe {
  double v = 0.0;
  bool feasible = false;
  std::int64_t iterations = 0;
};

struct EllipsoidResult {
  RowStrategy x_hat;
  ColumnStrategy y_hat;
  double v_final = 0.0;
  double gamma = 0.0;
  double restricted_value = 0.0;  // value of the LP restricted to 'discovered'
  std::vector<ColumnConstraint> discovered;
  std::vector<GridProbe> trace;
  std::int64_t total_iterations = 0;
};

// Binary search over {0, gamma, 2 gamma, ..., mu} for the largest value the
// ellipsoid test accepts, then the column player's LP restricted to the
// columns the separation oracle produced along the way.
EllipsoidResult SolveEllipsoid(const Game& game, const EllipsoidConfig& config);

// True when no probe in the trace is feasible above an infeasible one.
bool TraceIsMonotone(const std::vector<GridProbe>& trace);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_ELLIPSOID_SOLVER_H_

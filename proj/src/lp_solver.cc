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
#include "oracle_games/lp_solver.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "oracle_games/errors.h"

namespace oracle_games {
namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr double kPriceTolerance = 1e-12;
constexpr int kDegenerateRunBeforeBland = 50;

}  // namespace

ExactLpSolution SolveMatrixGame(const Matrix& payoffs) {
  if (payoffs.empty() || payoffs.front().empty()) {
    throw ContractError("matrix game must be nonempty");
  }
  const int n = payoffs.size();
  const int m = payoffs.front().size();
  double mu = 0.0;
  for (const auto& row : payoffs) {
    if (static_cast<int>(row.size()) != m) {
      throw ContractError("payoff matrix is ragged");
    }
    for (double a : row) {
      if (!(a >= 0.0) || !std::isfinite(a)) {
        throw ContractError("payoffs must be finite and >= 0");
      }
      mu = std::max(mu, a);
    }
  }
  if (!(mu > 0.0)) throw ContractError("payoff matrix is all zero");

  // Tableau rows: one per row player strategy. Columns: m structural, n
  // slack, right-hand side.
  const int width = m + n + 1;
  const int rhs = m + n;
  std::vector<std::vector<double>> tableau(n, std::vector<double>(width, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) tableau[i][j] = payoffs[i][j] / mu + 1.0;
    tableau[i][m + i] = 1.0;
    tableau[i][rhs] = 1.0;
  }
  // Reduced costs of the objective sum_j y_j; objective value in [rhs].
  std::vector<double> reduced(width, 0.0);
  for (int j = 0; j < m; ++j) reduced[j] = 1.0;
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) basis[i] = m + i;

  const int pivot_limit = 50 * (n + m) + 1000;
  int pivots = 0;
  int degenerate_run = 0;
  while (true) {
    const bool use_bland = degenerate_run >= kDegenerateRunBeforeBland;
    int entering = -1;
    for (int j = 0; j < m + n; ++j) {
      if (reduced[j] <= kPriceTolerance) continue;
      if (entering < 0 || (!use_bland && reduced[j] > reduced[entering])) {
        entering = j;
        if (use_bland) break;
      }
    }
    if (entering < 0) break;

    int leaving = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < n; ++i) {
      const double a = tableau[i][entering];
      if (a <= kPivotTolerance) continue;
      const double ratio = tableau[i][rhs] / a;
      if (leaving < 0 || ratio < best_ratio - 1e-15 ||
          (ratio <= best_ratio + 1e-15 && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    // Packing LP with positive entries is bounded, so a leaving row exists.
    if (leaving < 0) throw NumericalError("simplex found an unbounded ray");
    if (++pivots > pivot_limit) {
      throw NumericalError("simplex pivot guard exceeded after " +
                           std::to_string(pivot_limit) + " pivots");
    }
    degenerate_run = best_ratio <= 1e-15 ? degenerate_run + 1 : 0;

    auto& pivot_row = tableau[leaving];
    const double pivot = pivot_row[entering];
    for (double& v : pivot_row) v /= pivot;
    pivot_row[entering] = 1.0;
    for (int i = 0; i < n; ++i) {
      if (i == leaving) continue;
      const double factor = tableau[i][entering];
      if (factor == 0.0) continue;
      for (int k = 0; k < width; ++k) tableau[i][k] -= factor * pivot_row[k];
      tableau[i][entering] = 0.0;
      tableau[i][rhs] = std::max(tableau[i][rhs], 0.0);
    }
    const double factor = reduced[entering];
    for (int k = 0; k < width; ++k) reduced[k] -= factor * pivot_row[k];
    reduced[entering] = 0.0;
    basis[leaving] = entering;
  }

  std::vector<double> y(m, 0.0);
  for (int i = 0; i < n; ++i) {
    if (basis[i] < m) y[basis[i]] = std::max(tableau[i][rhs], 0.0);
  }
  std::vector<double> u(n, 0.0);
  for (int i = 0; i < n; ++i) u[i] = std::max(-reduced[m + i], 0.0);

  double y_total = 0.0;
  for (double v : y) y_total += v;
  double u_total = 0.0;
  for (double v : u) u_total += v;
  if (!(y_total > 0.0) || !(u_total > 0.0)) {
    throw NumericalError("simplex ended with an empty strategy");
  }

  ExactLpSolution solution;
  solution.pivots = pivots;
  solution.value = mu * (1.0 / y_total - 1.0);
  solution.x_star = FromDense(u);
  std::vector<MixedStrategy<int>::Entry> y_entries;
  for (int j = 0; j < m; ++j) y_entries.emplace_back(j, y[j]);
  solution.y_star = MixedStrategy<int>::Normalize(y_entries);

  const std::vector<double> x = ToDense(solution.x_star, n);
  std::vector<double> y_dense(m, 0.0);
  for (const auto& [j, w] : solution.y_star.entries()) y_dense[j] = w;
  solution.primal_value = mu;
  for (int j = 0; j < m; ++j) {
    double value = 0.0;
    for (int i = 0; i < n; ++i) value += x[i] * payoffs[i][j];
    solution.primal_value = std::min(solution.primal_value, value);
  }
  solution.dual_value = 0.0;
  for (int i = 0; i < n; ++i) {
    double value = 0.0;
    for (int j = 0; j < m; ++j) value += payoffs[i][j] * y_dense[j];
    solution.dual_value = std::max(solution.dual_value, value);
  }
  return solution;
}

}  // namespace oracle_games

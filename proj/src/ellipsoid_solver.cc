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

#include "oracle_games/ellipsoid_solver.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "oracle_games/errors.h"

namespace oracle_games {
namespace {

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

double ResolveGamma(const Game& game, const EllipsoidConfig& config) {
  const double gamma = config.gamma.value_or(1e-4 * game.max_payoff());
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ConfigError("gamma must be positive");
  }
  return gamma;
}

// Full strategy from the reduced coordinates.
std::vector<double> Lift(const std::vector<double>& center) {
  std::vector<double> x(center);
  double total = 0.0;
  for (double v : center) total += v;
  x.push_back(1.0 - total);
  return x;
}

std::vector<double> ClipToSimplex(std::vector<double> x) {
  double total = 0.0;
  for (double& v : x) {
    v = std::max(v, 0.0);
    total += v;
  }
  for (double& v : x) v /= total;
  return x;
}

}  // namespace

SeparationOutcome ApproximateSeparation(const Game& game,
                                        const std::vector<double>& x, double v,
                                        double feasibility_slack) {
  const int n = game.num_rows();
  if (static_cast<int>(x.size()) != n) {
    throw ContractError("query point has the wrong dimension");
  }
  SeparationOutcome outcome;
  double total = 0.0;
  for (double value : x) total += value;
  const double sum_slack = std::max(feasibility_slack, 1e-12);
  if (total > 1.0 + sum_slack || total < 1.0 - sum_slack) {
    const double sign = total > 1.0 ? -1.0 : 1.0;
    outcome.simplex_cut = Halfspace{std::vector<double>(n, sign), sign};
    return outcome;
  }
  for (int i = 0; i < n; ++i) {
    if (x[i] < -feasibility_slack) {
      std::vector<double> normal(n, 0.0);
      normal[i] = 1.0;
      outcome.simplex_cut = Halfspace{std::move(normal), 0.0};
      return outcome;
    }
  }
  PureResponse response = game.ComputeBestResponse(FromDense(ClipToSimplex(x)));
  std::vector<double> column = game.Column(response);
  if (Dot(x, column) < v) {
    outcome.column_cut = ColumnConstraint{std::move(response), std::move(column)};
    return outcome;
  }
  outcome.feasible = true;
  return outcome;
}

FeasibilityResult EllipsoidFeasibility(const Game& game, double v,
                                       const EllipsoidConfig& config) {
  const int n = game.num_rows();
  const int d = n - 1;
  const double mu = game.max_payoff();
  const double gamma = ResolveGamma(game, config);
  const double target = v - gamma / 2.0;
  FeasibilityResult result;

  if (d == 0) {
    result.iterations = 1;
    SeparationOutcome outcome =
        ApproximateSeparation(game, {1.0}, target, config.feasibility_slack);
    if (outcome.feasible) {
      result.feasible = true;
      result.point = {1.0};
    } else if (outcome.column_cut) {
      result.constraints.push_back(std::move(*outcome.column_cut));
    }
    return result;
  }

  const double initial_radius = std::sqrt(static_cast<double>(n));
  // A nonempty P(v - gamma/2) holds a point at least gamma/8 above the target
  // with every coordinate >= gamma/(8 mu n); a ball of this radius around it
  // stays feasible.
  const double inner_radius =
      gamma / (8.0 * mu * n * (1.0 + std::sqrt(static_cast<double>(d))));
  const double min_log_volume =
      config.min_log_volume.value_or(d * std::log(inner_radius));
  const std::int64_t cap = config.iteration_cap.value_or(
      static_cast<std::int64_t>(std::ceil(
          2.0 * d * (d + 1) * std::log(initial_radius / inner_radius))));

  std::vector<double> center(d, 1.0 / n);
  // The ellipsoid is {center + factor u : |u| <= 1}, i.e. shape matrix
  // factor * factor'. Updating the factor keeps the shape positive
  // semidefinite when cuts become nearly parallel.
  std::vector<std::vector<double>> factor(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i) factor[i][i] = initial_radius;
  double log_volume = d * std::log(initial_radius);

  const double dd = d;
  const double expand = dd * dd / (dd * dd - 1.0);
  const double log_volume_step =
      d == 1 ? -std::log(2.0)
             : 0.5 * (dd * std::log(expand) + std::log((dd - 1.0) / (dd + 1.0)));
  const double stretch = d == 1 ? 0.5 : std::sqrt(expand);
  const double shrink = d == 1 ? 0.0 : 1.0 - std::sqrt((dd - 1.0) / (dd + 1.0));

  std::vector<double> cut(d);
  std::vector<double> projected(d);
  std::vector<double> step(d);
  while (result.iterations < cap && log_volume >= min_log_volume) {
    ++result.iterations;
    const std::vector<double> x = Lift(center);
    SeparationOutcome outcome =
        ApproximateSeparation(game, x, target, config.feasibility_slack);
    if (outcome.feasible) {
      result.feasible = true;
      result.point = ClipToSimplex(x);
      return result;
    }
    // Valid inequality normal . x >= offset, rewritten in reduced
    // coordinates as g . y >= offset - normal_n. The kept half-space is
    // g . y >= g . center.
    Halfspace halfspace;
    if (outcome.column_cut) {
      halfspace = Halfspace{outcome.column_cut->column, target};
      result.constraints.push_back(std::move(*outcome.column_cut));
    } else {
      halfspace = std::move(*outcome.simplex_cut);
    }
    const double last = halfspace.normal[d];
    bool flat = true;
    for (int i = 0; i < d; ++i) {
      cut[i] = -(halfspace.normal[i] - last);
      if (cut[i] != 0.0) flat = false;
    }
    if (flat) {
      // The constraint does not depend on x and fails everywhere.
      return result;
    }
    // projected = factor' cut; step = factor projected / |projected|.
    for (int j = 0; j < d; ++j) {
      double total = 0.0;
      for (int i = 0; i < d; ++i) total += factor[i][j] * cut[i];
      projected[j] = total;
    }
    const double norm = std::sqrt(Dot(projected, projected));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw NumericalError("ellipsoid shape lost positive definiteness at "
                           "iteration " + std::to_string(result.iterations));
    }
    for (double& p : projected) p /= norm;
    for (int i = 0; i < d; ++i) step[i] = Dot(factor[i], projected);
    const double center_step = d == 1 ? 0.5 : 1.0 / (dd + 1.0);
    for (int i = 0; i < d; ++i) center[i] -= center_step * step[i];
    // factor <- stretch * factor (I - shrink p p').
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        factor[i][j] = stretch * (factor[i][j] - shrink * step[i] * projected[j]);
      }
    }
    log_volume += log_volume_step;
  }
  return result;
}

bool TraceIsMonotone(const std::vector<GridProbe>& trace) {
  for (const GridProbe& high : trace) {
    if (!high.feasible) continue;
    for (const GridProbe& low : trace) {
      if (low.v < high.v && !low.feasible) return false;
    }
  }
  return true;
}

EllipsoidResult SolveEllipsoid(const Game& game, const EllipsoidConfig& config) {
  const double mu = game.max_payoff();
  const double gamma = ResolveGamma(game, config);
  const std::int64_t steps =
      static_cast<std::int64_t>(std::ceil(mu / gamma - 1e-9));
  auto grid_point = [&](std::int64_t k) {
    return std::min(static_cast<double>(k) * gamma, mu);
  };

  EllipsoidResult result;
  result.gamma = gamma;
  std::map<std::string, std::size_t> seen;
  auto absorb = [&](FeasibilityResult& probe) {
    for (ColumnConstraint& constraint : probe.constraints) {
      if (seen.try_emplace(constraint.response.key(), result.discovered.size())
              .second) {
        result.discovered.push_back(std::move(constraint));
      }
    }
    result.total_iterations += probe.iterations;
  };

  FeasibilityResult at_zero = EllipsoidFeasibility(game, 0.0, config);
  result.trace.push_back({0.0, at_zero.feasible, at_zero.iterations});
  absorb(at_zero);
  if (!at_zero.feasible) {
    throw InternalError("ellipsoid test rejected v = 0");
  }
  std::vector<double> best_point = at_zero.point;
  std::int64_t low = 0;
  std::int64_t high = steps;
  while (low < high) {
    const std::int64_t mid = low + (high - low + 1) / 2;
    FeasibilityResult probe = EllipsoidFeasibility(game, grid_point(mid), config);
    result.trace.push_back({grid_point(mid), probe.feasible, probe.iterations});
    absorb(probe);
    if (probe.feasible) {
      low = mid;
      best_point = std::move(probe.point);
    } else {
      high = mid - 1;
    }
  }
  result.v_final = grid_point(low);
  result.x_hat = FromDense(best_point);

  if (result.discovered.empty()) {
    // Every probe passed, so no constraint was ever violated; the oracle's
    // answer at x_hat is the one column the restricted LP needs.
    PureResponse response = game.ComputeBestResponse(result.x_hat);
    std::vector<double> column = game.Column(response);
    result.discovered.push_back({std::move(response), std::move(column)});
  }

  const int n = game.num_rows();
  Matrix restricted(n, std::vector<double>(result.discovered.size()));
  for (std::size_t j = 0; j < result.discovered.size(); ++j) {
    for (int i = 0; i < n; ++i) {
      restricted[i][j] = result.discovered[j].column[i];
    }
  }
  const ExactLpSolution lp = SolveMatrixGame(restricted);
  result.restricted_value = lp.dual_value;
  std::vector<ColumnStrategy::Entry> entries;
  for (const auto& [j, weight] : lp.y_star.entries()) {
    entries.emplace_back(result.discovered[j].response, weight);
  }
  result.y_hat = ColumnStrategy::Normalize(entries);
  return result;
}

}  // namespace oracle_games

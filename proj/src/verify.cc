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

#include "oracle_games/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "oracle_games/errors.h"

namespace oracle_games {
namespace {

double Ratio(double numerator, double denominator) {
  if (denominator > 0.0) return numerator / denominator;
  return numerator > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
}

std::string DescribeRow(const RowStrategy& x) {
  std::ostringstream out;
  out.precision(17);
  out << "x_hat={";
  bool first = true;
  for (const auto& [row, weight] : x.entries()) {
    out << (first ? "" : ", ") << row << ": " << weight;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string DescribeColumn(const ColumnStrategy& y) {
  std::ostringstream out;
  out.precision(17);
  out << "y_hat={";
  bool first = true;
  for (const auto& [response, weight] : y.entries()) {
    out << (first ? "" : ", ") << response.key() << ": " << weight;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

std::vector<PureResponse> EnumerateResponses(const Game& game,
                                             std::size_t cap) {
  std::vector<PureResponse> responses = game.EnumerateResponses(cap);
  std::sort(responses.begin(), responses.end());
  responses.erase(std::unique(responses.begin(), responses.end()),
                  responses.end());
  return responses;
}

ExplicitGame BuildExplicitGame(const Game& game,
                               std::vector<PureResponse> responses) {
  ExplicitGame result;
  const int n = game.num_rows();
  result.matrix.assign(n, std::vector<double>(responses.size()));
  for (std::size_t j = 0; j < responses.size(); ++j) {
    const std::vector<double> column = game.Column(responses[j]);
    for (int i = 0; i < n; ++i) result.matrix[i][j] = column[i];
  }
  result.responses = std::move(responses);
  return result;
}

ExactGameSolution ExactGameSolve(const Game& game, std::size_t cap) {
  ExactGameSolution result;
  result.explicit_game = BuildExplicitGame(game, EnumerateResponses(game, cap));
  result.lp = SolveMatrixGame(result.explicit_game.matrix);
  result.x_star = result.lp.x_star;
  std::vector<ColumnStrategy::Entry> entries;
  for (const auto& [j, weight] : result.lp.y_star.entries()) {
    entries.emplace_back(result.explicit_game.responses[j], weight);
  }
  result.y_star = ColumnStrategy::Normalize(entries);
  result.value = result.lp.value;
  return result;
}

GuaranteeReport EvaluateGuarantees(const Game& game,
                                   const ExactGameSolution& exact,
                                   const RowStrategy& x_hat,
                                   const ColumnStrategy& y_hat) {
  const ExplicitGame& explicit_game = exact.explicit_game;
  const int n = game.num_rows();
  const std::vector<double> x = ToDense(x_hat, n);
  GuaranteeReport report;
  report.v_star = exact.value;
  report.player1_worst = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < explicit_game.responses.size(); ++j) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += x[i] * explicit_game.matrix[i][j];
    report.player1_worst = std::min(report.player1_worst, total);
  }
  report.player2_worst = WorstCaseForColumn(game, y_hat);
  report.ratio1 = Ratio(report.v_star, report.player1_worst);
  report.ratio2 = Ratio(report.player2_worst, report.v_star);
  return report;
}

GuaranteeReport EvaluateGuarantees(const Game& game, const RowStrategy& x_hat,
                                   const ColumnStrategy& y_hat,
                                   std::size_t cap) {
  return EvaluateGuarantees(game, ExactGameSolve(game, cap), x_hat, y_hat);
}

bool WeakDualityHolds(const GuaranteeReport& report, double mu,
                      double tolerance) {
  const double slack = tolerance * mu;
  return report.player1_worst <= report.v_star + slack &&
         report.v_star <= report.player2_worst + slack;
}

void RequireRatios(const GuaranteeReport& report, double bound1,
                   double bound2, const RowStrategy& x_hat,
                   const ColumnStrategy& y_hat) {
  if (!(report.ratio1 <= bound1)) {
    throw GuaranteeViolation("row strategy ratio " +
                                 std::to_string(report.ratio1) +
                                 " exceeds " + std::to_string(bound1),
                             DescribeRow(x_hat));
  }
  if (!(report.ratio2 <= bound2)) {
    throw GuaranteeViolation("column strategy ratio " +
                                 std::to_string(report.ratio2) +
                                 " exceeds " + std::to_string(bound2),
                             DescribeColumn(y_hat));
  }
}

void RequireRatios(const GuaranteeReport& report, double bound,
                   const RowStrategy& x_hat, const ColumnStrategy& y_hat) {
  RequireRatios(report, bound, bound, x_hat, y_hat);
}

GuaranteeReport CheckGuarantees(const Game& game, const RowStrategy& x_hat,
                                const ColumnStrategy& y_hat, double alpha,
                                double epsilon, std::size_t cap) {
  GuaranteeReport report = EvaluateGuarantees(game, x_hat, y_hat, cap);
  RequireRatios(report, alpha * (1.0 + epsilon) + 1e-6, x_hat, y_hat);
  return report;
}

}  // namespace oracle_games

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
#include "oracle_games/games/matrix_game.h"

#include <algorithm>
#include <cmath>

#include "oracle_games/errors.h"

namespace oracle_games {

MatrixGame::MatrixGame(Matrix payoffs) : payoffs_(std::move(payoffs)) {
  if (payoffs_.empty() || payoffs_.front().empty()) {
    throw ConfigError("payoff matrix must be nonempty");
  }
  const std::size_t m = payoffs_.front().size();
  std::vector<double> column_max(m, 0.0);
  for (const auto& row : payoffs_) {
    if (row.size() != m) throw ConfigError("payoff matrix is ragged");
    for (std::size_t j = 0; j < m; ++j) {
      if (!(row[j] >= 0.0) || !std::isfinite(row[j])) {
        throw ConfigError("payoffs must be finite and >= 0");
      }
      column_max[j] = std::max(column_max[j], row[j]);
    }
  }
  // A zero column lets the column player force value 0.
  for (std::size_t j = 0; j < m; ++j) {
    if (column_max[j] == 0.0) {
      throw ConfigError("column " + std::to_string(j) +
                        " is all zero; game value would be 0");
    }
  }
  max_payoff_ = *std::max_element(column_max.begin(), column_max.end());
}

int MatrixGame::CheckedColumn(const PureResponse& response) const {
  if (response.kind() != ResponseKind::kColumn) {
    throw ContractError("matrix game expects a column, got " + response.key());
  }
  const int j = response.items().front();
  if (j < 0 || j >= num_columns()) {
    throw ContractError("column " + std::to_string(j) + " out of range");
  }
  return j;
}

double MatrixGame::Payoff(int row, const PureResponse& response) const {
  CheckRow(row);
  return payoffs_[row][CheckedColumn(response)];
}

std::vector<double> MatrixGame::Column(const PureResponse& response) const {
  const int j = CheckedColumn(response);
  std::vector<double> column(num_rows());
  for (int i = 0; i < num_rows(); ++i) column[i] = payoffs_[i][j];
  return column;
}

PureResponse MatrixGame::ComputeBestResponse(const RowStrategy& x) const {
  const std::vector<double> dense = ToDense(x, num_rows());
  int best = 0;
  double best_value = 0.0;
  for (int j = 0; j < num_columns(); ++j) {
    double value = 0.0;
    for (int i = 0; i < num_rows(); ++i) value += dense[i] * payoffs_[i][j];
    if (j == 0 || value < best_value) {
      best = j;
      best_value = value;
    }
  }
  return PureResponse::Column(best);
}

std::vector<PureResponse> MatrixGame::EnumerateResponses(
    std::size_t cap) const {
  if (static_cast<std::size_t>(num_columns()) > cap) {
    throw SizeError("matrix has more columns than the cap",
                    static_cast<std::size_t>(num_columns()));
  }
  std::vector<PureResponse> out;
  for (int j = 0; j < num_columns(); ++j) out.push_back(PureResponse::Column(j));
  return out;
}

}  // namespace oracle_games

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
#include "oracle_games/games/hspe_game.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracle_games/errors.h"
#include "oracle_games/games/box_game.h"
#include "oracle_games/games/enumeration.h"
#include "oracle_games/games/knapsack.h"

namespace oracle_games {

HspeGame::HspeGame(std::vector<double> costs, std::vector<double> capture,
                   double budget, double oracle_epsilon)
    : costs_(std::move(costs)),
      capture_(std::move(capture)),
      budget_(budget),
      oracle_epsilon_(oracle_epsilon) {
  ValidateCosts(costs_);
  if (capture_.size() != costs_.size()) {
    throw ConfigError("hspe needs one capture probability per location");
  }
  for (double p : capture_) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw ConfigError("capture probabilities must lie in (0, 1]");
    }
  }
  if (!(budget_ > 0.0) || !std::isfinite(budget_)) {
    throw ConfigError("hspe budget must be finite and positive");
  }
  if (*std::min_element(costs_.begin(), costs_.end()) > budget_) {
    throw ConfigError("budget below the cheapest location");
  }
  if (!(oracle_epsilon_ > 0.0)) {
    throw ConfigError("hspe oracle epsilon must be positive");
  }
  // Escape value is zero only when one affordable search captures everyone.
  const double total = std::accumulate(costs_.begin(), costs_.end(), 0.0);
  const bool sure_capture = std::all_of(
      capture_.begin(), capture_.end(), [](double p) { return p == 1.0; });
  if (sure_capture && total <= budget_) {
    throw ConfigError(
        "budget covers every location with certain capture; escape value is 0");
  }
}

bool HspeGame::IsAffordable(const std::vector<int>& subset) const {
  double spent = 0.0;
  for (int j : subset) spent += costs_[j];
  return spent <= budget_ * (1.0 + 1e-12);
}

const std::vector<int>& HspeGame::CheckedSubset(
    const PureResponse& response) const {
  if (response.kind() != ResponseKind::kSubset) {
    throw ContractError("hspe game expects a subset, got " + response.key());
  }
  for (int j : response.items()) {
    if (j < 0 || j >= num_rows()) {
      throw ContractError("subset member out of range in " + response.key());
    }
  }
  if (!IsAffordable(response.items())) {
    throw ContractError(response.key() + " exceeds the search budget");
  }
  return response.items();
}

double HspeGame::CapturePayoff(int row, const PureResponse& response) const {
  CheckRow(row);
  const auto& subset = CheckedSubset(response);
  return std::binary_search(subset.begin(), subset.end(), row) ? capture_[row]
                                                               : 0.0;
}

double HspeGame::Payoff(int row, const PureResponse& response) const {
  return 1.0 - CapturePayoff(row, response);
}

std::vector<double> HspeGame::Column(const PureResponse& response) const {
  std::vector<double> column(num_rows(), 1.0);
  for (int j : CheckedSubset(response)) column[j] = 1.0 - capture_[j];
  return column;
}

PureResponse HspeGame::ComputeBestResponse(const RowStrategy& x) const {
  std::vector<double> profit = ToDense(x, num_rows());
  for (int j = 0; j < num_rows(); ++j) profit[j] *= capture_[j];
  return PureResponse::Subset(
      KnapsackFptas(profit, costs_, budget_, oracle_epsilon_));
}

std::vector<PureResponse> HspeGame::EnumerateResponses(std::size_t cap) const {
  const int n = num_rows();
  if (n > kMaxSubsetRows) {
    throw SizeError("subset enumeration of n=" + std::to_string(n) +
                        " exceeds the family limit",
                    std::nullopt);
  }
  std::vector<PureResponse> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    double spent = 0.0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        subset.push_back(j);
        spent += costs_[j];
      }
    }
    if (spent > budget_ * (1.0 + 1e-12)) continue;
    if (out.size() == cap) {
      throw SizeError("feasible subset enumeration exceeds cap " +
                          std::to_string(cap),
                      std::nullopt);
    }
    out.push_back(PureResponse::Subset(std::move(subset)));
  }
  return out;
}

}  // namespace oracle_games

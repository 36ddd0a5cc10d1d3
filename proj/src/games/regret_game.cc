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
#include "oracle_games/games/regret_game.h"

#include <algorithm>
#include <cmath>

#include "oracle_games/errors.h"

namespace oracle_games {

RegretGame::RegretGame(std::shared_ptr<const Game> base,
                       std::vector<double> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (!base_) throw ConfigError("regret wrapper needs a base game");
  if (static_cast<int>(weights_.size()) != base_->num_rows()) {
    throw ConfigError("regret wrapper needs one weight per row");
  }
  for (double k : weights_) {
    if (!(k > 0.0) || !std::isfinite(k)) {
      throw ConfigError("regret weights must be finite and positive");
    }
  }
  max_payoff_ = *std::max_element(weights_.begin(), weights_.end()) *
                base_->max_payoff();
}

double RegretGame::Payoff(int row, const PureResponse& response) const {
  CheckRow(row);
  return weights_[row] * base_->Payoff(row, response);
}

std::vector<double> RegretGame::Column(const PureResponse& response) const {
  std::vector<double> column = base_->Column(response);
  for (int i = 0; i < num_rows(); ++i) column[i] *= weights_[i];
  return column;
}

RowStrategy RegretGame::ReweightedQuery(const RowStrategy& x) const {
  std::vector<RowStrategy::Entry> scaled;
  scaled.reserve(x.size());
  for (const auto& [row, weight] : x.entries()) {
    if (row < 0 || row >= num_rows()) {
      throw ContractError("strategy index out of range");
    }
    scaled.emplace_back(row, weights_[row] * weight);
  }
  return RowStrategy::Normalize(scaled);
}

PureResponse RegretGame::ComputeBestResponse(const RowStrategy& x) const {
  return base_->ComputeBestResponse(ReweightedQuery(x));
}

std::vector<PureResponse> RegretGame::EnumerateResponses(
    std::size_t cap) const {
  return base_->EnumerateResponses(cap);
}

}  // namespace oracle_games

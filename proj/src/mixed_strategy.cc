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

#include "oracle_games/mixed_strategy.h"

#include <string>

namespace oracle_games {

std::vector<double> ToDense(const RowStrategy& x, int n) {
  std::vector<double> dense(n, 0.0);
  for (const auto& [index, weight] : x.entries()) {
    if (index < 0 || index >= n) {
      throw ContractError("strategy index " + std::to_string(index) +
                          " outside [0, " + std::to_string(n) + ")");
    }
    dense[index] += weight;
  }
  return dense;
}

RowStrategy FromDense(std::span<const double> weights) {
  std::vector<RowStrategy::Entry> entries;
  entries.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    entries.emplace_back(static_cast<int>(i), weights[i]);
  }
  return RowStrategy::Normalize(entries);
}

RowStrategy Uniform(int n) {
  return FromDense(std::vector<double>(n, 1.0));
}

}  // namespace oracle_games

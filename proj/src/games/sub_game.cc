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
#include "oracle_games/games/sub_game.h"

#include <cmath>
#include <limits>
#include <random>

#include "oracle_games/errors.h"
#include "oracle_games/games/enumeration.h"

namespace oracle_games {
namespace {

void CheckTriple(const std::vector<double>& f, std::uint32_t set, int i,
                 int j) {
  const std::uint32_t bi = 1u << i;
  const std::uint32_t bj = 1u << j;
  const double slack = 1e-9 * (std::abs(f.back()) + 1.0);
  if (f[set | bi] + slack < f[set]) {
    throw ConfigError("set function is not non-decreasing");
  }
  if (i != j && !(set & bi) && !(set & bj)) {
    const double gain = f[set | bi] - f[set];
    const double later_gain = f[set | bi | bj] - f[set | bj];
    if (later_gain > gain + slack) {
      throw ConfigError("set function is not submodular");
    }
  }
}

}  // namespace

SubGame::SubGame(int n, SetFunction cost) : n_(n) {
  if (n < 1 || n > kMaxSubRows) {
    throw ConfigError("sub game needs 1 <= n <= " +
                      std::to_string(kMaxSubRows));
  }
  const std::uint32_t full = (1u << n) - 1;
  table_.resize(full + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    table_[mask] = cost(mask);
    if (!std::isfinite(table_[mask]) || table_[mask] < 0.0) {
      throw ConfigError("set function values must be finite and >= 0");
    }
  }
  if (n <= kExhaustiveSubmodularCheckRows) {
    for (std::uint32_t set = 0; set <= full; ++set) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) CheckTriple(table_, set, i, j);
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> any_set(0, full);
    std::uniform_int_distribution<int> any_item(0, n - 1);
    for (int trial = 0; trial < 20000; ++trial) {
      CheckTriple(table_, any_set(rng), any_item(rng), any_item(rng));
    }
  }
  // Every singleton costs something, so every payoff is positive and the
  // game value cannot be zero.
  for (int j = 0; j < n; ++j) {
    if (!(table_[1u << j] > 0.0)) {
      throw ConfigError("f({j}) must be positive for every location");
    }
  }
}

SubGame SubGame::Tabulated(int n, std::vector<double> values) {
  if (n < 1 || n > kMaxSubRows || values.size() != (std::size_t{1} << n)) {
    throw ConfigError("tabulated set function needs 2^n values");
  }
  return SubGame(n, [&values](std::uint32_t mask) { return values[mask]; });
}

const std::vector<int>& SubGame::CheckedOrder(
    const PureResponse& response) const {
  if (response.kind() != ResponseKind::kPermutation) {
    throw ContractError("sub game expects a permutation, got " +
                        response.key());
  }
  CheckPermutation(response.items(), n_);
  return response.items();
}

double SubGame::Payoff(int row, const PureResponse& response) const {
  CheckRow(row);
  std::uint32_t searched = 0;
  for (int v : CheckedOrder(response)) {
    searched |= 1u << v;
    if (v == row) break;
  }
  return table_[searched];
}

std::vector<double> SubGame::Column(const PureResponse& response) const {
  std::vector<double> column(n_);
  std::uint32_t searched = 0;
  for (int v : CheckedOrder(response)) {
    searched |= 1u << v;
    column[v] = table_[searched];
  }
  return column;
}

PureResponse SubGame::ComputeBestResponse(const RowStrategy& x) const {
  const std::vector<double> weight = ToDense(x, n_);
  const std::uint32_t full = (1u << n_) - 1;
  // best[S]: least cost of searching exactly S first, in some order, where
  // the location searched last in S pays weight * f(S).
  std::vector<double> best(full + 1, std::numeric_limits<double>::infinity());
  std::vector<int> last(full + 1, -1);
  best[0] = 0.0;
  for (std::uint32_t set = 1; set <= full; ++set) {
    for (int j = 0; j < n_; ++j) {
      const std::uint32_t bit = 1u << j;
      if (!(set & bit)) continue;
      const double candidate = best[set ^ bit] + weight[j] * table_[set];
      if (candidate < best[set]) {
        best[set] = candidate;
        last[set] = j;
      }
    }
  }
  std::vector<int> order(n_);
  std::uint32_t set = full;
  for (int k = n_ - 1; k >= 0; --k) {
    order[k] = last[set];
    set ^= 1u << last[set];
  }
  return PureResponse::Permutation(std::move(order));
}

std::vector<PureResponse> SubGame::EnumerateResponses(std::size_t cap) const {
  std::vector<PureResponse> out;
  for (auto& order : AllPermutations(n_, cap)) {
    out.push_back(PureResponse::Permutation(std::move(order)));
  }
  return out;
}

}  // namespace oracle_games

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

#ifndef ORACLE_GAMES_MIXED_STRATEGY_H_
#define ORACLE_GAMES_MIXED_STRATEGY_H_

#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oracle_games/errors.h"
#include "oracle_games/pure_response.h"

namespace oracle_games {

// Sparse probability vector. Every stored weight is strictly positive, keys
// are distinct and the weights sum to one within 1e-9.
template <typename Key>
class MixedStrategy {
 public:
  using Entry = std::pair<Key, double>;

  // Merges repeated keys by summing, drops zero entries and divides by the
  // total. Entries keep the order of first appearance.
  static MixedStrategy Normalize(const std::vector<Entry>& weights) {
    std::vector<Entry> merged;
    std::map<Key, std::size_t> position;
    double total = 0.0;
    for (const auto& [key, weight] : weights) {
      if (!(weight >= 0.0) || !std::isfinite(weight)) {
        throw InvalidDistributionError("weights must be finite and >= 0");
      }
      total += weight;
      auto [it, inserted] = position.try_emplace(key, merged.size());
      if (inserted) {
        merged.emplace_back(key, weight);
      } else {
        merged[it->second].second += weight;
      }
    }
    if (!(total > 0.0)) {
      throw InvalidDistributionError("weights sum to zero");
    }
    MixedStrategy result;
    for (auto& [key, weight] : merged) {
      if (weight > 0.0) result.entries_.emplace_back(key, weight / total);
    }
    return result;
  }

  static MixedStrategy PointMass(Key key) {
    MixedStrategy result;
    result.entries_.emplace_back(std::move(key), 1.0);
    return result;
  }

  // Takes entries as given after checking the invariants.
  static MixedStrategy FromEntries(std::vector<Entry> entries,
                                   double tolerance = 1e-9) {
    std::map<Key, int> seen;
    double total = 0.0;
    for (const auto& [key, weight] : entries) {
      if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw InvalidDistributionError("entry weights must be positive");
      }
      if (!seen.try_emplace(key, 0).second) {
        throw InvalidDistributionError("repeated key in mixed strategy");
      }
      total += weight;
    }
    if (std::abs(total - 1.0) > tolerance) {
      throw InvalidDistributionError("weights sum to " + std::to_string(total));
    }
    MixedStrategy result;
    result.entries_ = std::move(entries);
    return result;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double WeightOf(const Key& key) const {
    for (const auto& [k, w] : entries_) {
      if (k == key) return w;
    }
    return 0.0;
  }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<Entry> entries_;
};

// Player I (row player, the Hider) strategies are over indices [0, n).
using RowStrategy = MixedStrategy<int>;
// Player II (column player, the Searcher) strategies are over responses.
using ColumnStrategy = MixedStrategy<PureResponse>;

// Dense view of x. Throws ContractError on an index outside [0, n).
std::vector<double> ToDense(const RowStrategy& x, int n);

// Sparse form of a nonnegative vector, normalized.
RowStrategy FromDense(std::span<const double> weights);

RowStrategy Uniform(int n);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_MIXED_STRATEGY_H_

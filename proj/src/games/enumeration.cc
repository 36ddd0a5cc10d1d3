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
#include "oracle_games/games/enumeration.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "oracle_games/errors.h"

namespace oracle_games {

void CheckPermutation(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw ContractError("permutation has length " +
                        std::to_string(order.size()) + ", expected " +
                        std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw ContractError("not a permutation of [0, " + std::to_string(n) +
                          ")");
    }
    seen[v] = true;
  }
}

std::vector<int> InversePermutation(const std::vector<int>& order) {
  std::vector<int> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  return position;
}

std::vector<std::vector<int>> AllPermutations(int n, std::size_t cap) {
  std::size_t count = 1;
  for (int k = 2; k <= n; ++k) count *= k;
  if (n > kMaxPermutationRows || count > cap) {
    throw SizeError("permutation enumeration of n=" + std::to_string(n) +
                        " exceeds cap (" + std::to_string(count) +
                        " responses)",
                    count);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> result;
  result.reserve(count);
  do {
    result.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

namespace {

struct ExtensionSearch {
  const std::vector<std::vector<int>>& predecessors;
  std::size_t cap;
  std::vector<int> pending;  // unplaced predecessors per element
  std::vector<bool> placed;
  std::vector<int> prefix;
  std::vector<std::vector<int>> out;

  void Run(const std::vector<std::vector<int>>& successors) {
    const int n = predecessors.size();
    if (static_cast<int>(prefix.size()) == n) {
      if (out.size() == cap) {
        throw SizeError("linear extension enumeration exceeds cap " +
                            std::to_string(cap),
                        std::nullopt);
      }
      out.push_back(prefix);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (placed[v] || pending[v] != 0) continue;
      placed[v] = true;
      prefix.push_back(v);
      for (int s : successors[v]) --pending[s];
      Run(successors);
      for (int s : successors[v]) ++pending[s];
      prefix.pop_back();
      placed[v] = false;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> AllLinearExtensions(
    const std::vector<std::vector<int>>& predecessors, std::size_t cap) {
  const int n = predecessors.size();
  if (n > kMaxLinearExtensionRows) {
    throw SizeError("linear extension enumeration of n=" + std::to_string(n) +
                        " exceeds the family limit",
                    std::nullopt);
  }
  std::vector<std::vector<int>> successors(n);
  ExtensionSearch search{predecessors, cap, std::vector<int>(n, 0),
                         std::vector<bool>(n, false), {}, {}};
  for (int v = 0; v < n; ++v) {
    for (int p : predecessors[v]) {
      successors[p].push_back(v);
      ++search.pending[v];
    }
  }
  search.Run(successors);
  return std::move(search.out);
}

}  // namespace oracle_games

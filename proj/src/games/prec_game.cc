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
#include "oracle_games/games/prec_game.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "oracle_games/errors.h"
#include "oracle_games/games/box_game.h"
#include "oracle_games/games/enumeration.h"
#include "oracle_games/games/max_flow.h"

namespace oracle_games {

std::vector<std::vector<int>> BuildPredecessors(
    int n, const std::vector<PrecedenceEdge>& edges) {
  std::vector<std::vector<int>> predecessors(n);
  std::vector<std::vector<int>> successors(n);
  std::vector<int> indegree(n, 0);
  for (const auto& [before, after] : edges) {
    if (before < 0 || before >= n || after < 0 || after >= n) {
      throw ConfigError("precedence edge endpoint out of range");
    }
    if (before == after) throw ConfigError("precedence self loop");
    if (std::find(predecessors[after].begin(), predecessors[after].end(),
                  before) != predecessors[after].end()) {
      continue;
    }
    predecessors[after].push_back(before);
    successors[before].push_back(after);
    ++indegree[after];
  }
  std::queue<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  int visited = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop();
    ++visited;
    for (int s : successors[v]) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (visited != n) throw ConfigError("precedence relation has a cycle");
  for (auto& list : predecessors) std::sort(list.begin(), list.end());
  return predecessors;
}

namespace {

// Largest closed subset of 'jobs' maximizing weight(S) - lambda * cost(S),
// together with that maximum.
std::pair<std::vector<int>, double> MaximizeShiftedWeight(
    const std::vector<int>& jobs, std::span<const double> weights,
    std::span<const double> costs,
    const std::vector<std::vector<int>>& predecessors,
    const std::vector<bool>& remaining, double lambda) {
  const int m = jobs.size();
  const int source = m;
  const int sink = m + 1;
  std::vector<int> local(remaining.size(), -1);
  for (int k = 0; k < m; ++k) local[jobs[k]] = k;

  double scale = 0.0;
  MaxFlow flow(m + 2);
  for (int k = 0; k < m; ++k) {
    const int job = jobs[k];
    flow.AddEdge(source, k, weights[job]);
    flow.AddEdge(k, sink, lambda * costs[job]);
    scale += weights[job] + lambda * costs[job];
    for (int p : predecessors[job]) {
      if (remaining[p]) flow.AddEdge(k, local[p], MaxFlow::kInfinity);
    }
  }
  const double zero = 1e-13 * std::max(scale, 1e-300);
  flow.Solve(source, sink, zero);
  const std::vector<bool> reaches_sink = flow.CanReachSink(sink);
  std::vector<int> chosen;
  double value = 0.0;
  for (int k = 0; k < m; ++k) {
    if (!reaches_sink[k]) {
      chosen.push_back(jobs[k]);
      value += weights[jobs[k]] - lambda * costs[jobs[k]];
    }
  }
  return {chosen, value};
}

}  // namespace

std::vector<int> MaxDensityClosure(
    std::span<const double> weights, std::span<const double> costs,
    const std::vector<std::vector<int>>& predecessors,
    const std::vector<bool>& remaining) {
  std::vector<int> jobs;
  double total_weight = 0.0;
  double total_cost = 0.0;
  for (std::size_t v = 0; v < remaining.size(); ++v) {
    if (!remaining[v]) continue;
    jobs.push_back(v);
    total_weight += weights[v];
    total_cost += costs[v];
  }
  if (jobs.empty()) throw ContractError("no remaining jobs");

  // The whole remaining set is closed, so its density is a valid start.
  double lambda = total_weight / total_cost;
  std::vector<int> best = jobs;
  const double tolerance = 1e-12 * (total_weight + 1e-300);
  for (std::size_t round = 0; round <= jobs.size() + 1; ++round) {
    auto [candidate, value] = MaximizeShiftedWeight(
        jobs, weights, costs, predecessors, remaining, lambda);
    if (value <= tolerance || candidate.empty()) {
      // lambda is the optimal density; candidate is the largest closure
      // attaining it (or empty when rounding hid it).
      if (!candidate.empty()) best = std::move(candidate);
      return best;
    }
    double w = 0.0;
    double c = 0.0;
    for (int v : candidate) {
      w += weights[v];
      c += costs[v];
    }
    if (w / c <= lambda) return candidate;
    lambda = w / c;
    best = std::move(candidate);
  }
  return best;
}

std::vector<int> SidneyOrder(
    std::span<const double> weights, std::span<const double> costs,
    const std::vector<std::vector<int>>& predecessors) {
  const int n = costs.size();
  std::vector<bool> remaining(n, true);
  std::vector<bool> done(n, false);
  std::vector<int> order;
  order.reserve(n);
  while (static_cast<int>(order.size()) < n) {
    const std::vector<int> block =
        MaxDensityClosure(weights, costs, predecessors, remaining);
    std::set<int> pending(block.begin(), block.end());
    while (!pending.empty()) {
      bool progressed = false;
      for (int v : pending) {
        const bool ready = std::all_of(
            predecessors[v].begin(), predecessors[v].end(),
            [&](int p) { return done[p]; });
        if (!ready) continue;
        order.push_back(v);
        done[v] = true;
        remaining[v] = false;
        pending.erase(v);
        progressed = true;
        break;
      }
      if (!progressed) throw InternalError("Sidney block is not closed");
    }
  }
  return order;
}

PrecGame::PrecGame(std::vector<double> costs, std::vector<PrecedenceEdge> edges)
    : costs_(std::move(costs)), edges_(std::move(edges)) {
  ValidateCosts(costs_);
  predecessors_ = BuildPredecessors(costs_.size(), edges_);
  total_cost_ = std::accumulate(costs_.begin(), costs_.end(), 0.0);
}

bool PrecGame::IsLinearExtension(const std::vector<int>& order) const {
  CheckPermutation(order, num_rows());
  const std::vector<int> position = InversePermutation(order);
  for (const auto& [before, after] : edges_) {
    if (position[before] > position[after]) return false;
  }
  return true;
}

const std::vector<int>& PrecGame::CheckedOrder(
    const PureResponse& response) const {
  if (response.kind() != ResponseKind::kPermutation) {
    throw ContractError("prec game expects a permutation, got " +
                        response.key());
  }
  if (!IsLinearExtension(response.items())) {
    throw ContractError(response.key() + " violates the precedence order");
  }
  return response.items();
}

double PrecGame::Payoff(int row, const PureResponse& response) const {
  CheckRow(row);
  return BoxPayoff(costs_, row, CheckedOrder(response));
}

std::vector<double> PrecGame::Column(const PureResponse& response) const {
  return BoxColumn(costs_, CheckedOrder(response));
}

PureResponse PrecGame::ComputeBestResponse(const RowStrategy& x) const {
  return PureResponse::Permutation(
      SidneyOrder(ToDense(x, num_rows()), costs_, predecessors_));
}

std::vector<PureResponse> PrecGame::EnumerateResponses(std::size_t cap) const {
  std::vector<PureResponse> out;
  for (auto& order : AllLinearExtensions(predecessors_, cap)) {
    out.push_back(PureResponse::Permutation(std::move(order)));
  }
  return out;
}

}  // namespace oracle_games

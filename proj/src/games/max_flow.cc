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
#include "oracle_games/games/max_flow.h"

#include <algorithm>
#include <queue>

namespace oracle_games {

MaxFlow::MaxFlow(int num_nodes) : adjacency_(num_nodes) {}

void MaxFlow::AddEdge(int from, int to, double capacity) {
  adjacency_[from].push_back(
      Arc{to, static_cast<int>(adjacency_[to].size()), capacity});
  adjacency_[to].push_back(
      Arc{from, static_cast<int>(adjacency_[from].size()) - 1, 0.0});
}

bool MaxFlow::BuildLevels(int source, int sink) {
  level_.assign(adjacency_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const Arc& arc : adjacency_[u]) {
      if (arc.residual > zero_ && level_[arc.to] < 0) {
        level_[arc.to] = level_[u] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

double MaxFlow::Augment(int node, int sink, double limit) {
  if (node == sink) return limit;
  for (std::size_t& k = next_arc_[node]; k < adjacency_[node].size(); ++k) {
    Arc& arc = adjacency_[node][k];
    if (arc.residual <= zero_ || level_[arc.to] != level_[node] + 1) continue;
    const double pushed = Augment(arc.to, sink, std::min(limit, arc.residual));
    if (pushed > 0.0) {
      arc.residual -= pushed;
      adjacency_[arc.to][arc.reverse].residual += pushed;
      return pushed;
    }
  }
  return 0.0;
}

double MaxFlow::Solve(int source, int sink, double zero) {
  zero_ = zero;
  double total = 0.0;
  while (BuildLevels(source, sink)) {
    next_arc_.assign(adjacency_.size(), 0);
    while (true) {
      const double pushed = Augment(source, sink, kInfinity);
      if (pushed <= 0.0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<bool> MaxFlow::CanReachSink(int sink) const {
  std::vector<bool> reach(adjacency_.size(), false);
  std::queue<int> queue;
  reach[sink] = true;
  queue.push(sink);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    // u reaches v in the residual graph iff the arc u->v has residual left;
    // that arc is the reverse of v's entry for u.
    for (const Arc& arc : adjacency_[v]) {
      const Arc& forward = adjacency_[arc.to][arc.reverse];
      if (!reach[arc.to] && forward.residual > zero_) {
        reach[arc.to] = true;
        queue.push(arc.to);
      }
    }
  }
  return reach;
}

}  // namespace oracle_games

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
#ifndef ORACLE_GAMES_GAMES_MAX_FLOW_H_
#define ORACLE_GAMES_GAMES_MAX_FLOW_H_

#include <limits>
#include <vector>

namespace oracle_games {

// Dense-ish augmenting path max-flow (Dinic) on real capacities, sized for
// the small closure networks built by the precedence oracle.
class MaxFlow {
 public:
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  explicit MaxFlow(int num_nodes);

  void AddEdge(int from, int to, double capacity);

  // Pushes a maximum flow; residual capacities at or below 'zero' count as
  // saturated.
  double Solve(int source, int sink, double zero);

  // After Solve: true for nodes that can still reach the sink through the
  // residual graph. Their complement is the largest source side of a
  // minimum cut.
  std::vector<bool> CanReachSink(int sink) const;

 private:
  struct Arc {
    int to;
    int reverse;
    double residual;
  };

  bool BuildLevels(int source, int sink);
  double Augment(int node, int sink, double limit);

  std::vector<std::vector<Arc>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> next_arc_;
  double zero_ = 0.0;
};

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_MAX_FLOW_H_

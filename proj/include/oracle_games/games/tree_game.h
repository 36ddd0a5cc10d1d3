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
#ifndef ORACLE_GAMES_GAMES_TREE_GAME_H_
#define ORACLE_GAMES_GAMES_TREE_GAME_H_

#include <span>
#include <string>
#include <vector>

#include "oracle_games/game.h"

namespace oracle_games {

struct TreeEdge {
  int u = 0;
  int v = 0;
  double cost = 0.0;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// A rooted tree with positive edge costs. The Hider's pure strategies are the
// non-root vertices, numbered as rows in ascending vertex order. Edge ids are
// positions in the constructor's edge list.
class Tree {
 public:
  Tree(int num_vertices, int root, std::vector<TreeEdge> edges);

  int num_vertices() const { return num_vertices_; }
  int root() const { return root_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  int num_rows() const { return num_vertices_ - 1; }

  int VertexOfRow(int row) const { return row_vertex_[row]; }
  int RowOfVertex(int vertex) const { return vertex_row_[vertex]; }
  // Edge joining 'vertex' to its parent. Undefined for the root.
  int ParentEdge(int vertex) const { return parent_edge_[vertex]; }
  int Parent(int vertex) const { return parent_[vertex]; }
  // The endpoint of 'edge' farther from the root.
  int ChildOf(int edge) const { return edge_child_[edge]; }
  // d(v): cost of the unique root-to-v path.
  double Depth(int vertex) const { return depth_[vertex]; }
  double total_cost() const { return total_cost_; }

  // Throws ContractError unless 'sequence' is a full expanding search: every
  // edge exactly once, each edge touching the root or an earlier edge.
  void CheckExpandingSearch(const std::vector<int>& sequence) const;

  // Search cost per row: the prefix cost through the first edge incident to
  // that row's vertex. Validates the sequence.
  std::vector<double> SearchCosts(const std::vector<int>& sequence) const;

  // All full expanding searches, lexicographic by edge id. SizeError beyond
  // kMaxExpandingSearchRows hiders or 'cap' sequences.
  std::vector<std::vector<int>> AllExpandingSearches(std::size_t cap) const;

 private:
  int num_vertices_;
  int root_;
  std::vector<TreeEdge> edges_;
  std::vector<int> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> edge_child_;
  std::vector<double> depth_;
  std::vector<int> row_vertex_;
  std::vector<int> vertex_row_;
  double total_cost_ = 0.0;
};

// Exact minimizer of expected search cost for Hider weights over rows.
//
// Tree scheduling by unit merging: every non-root vertex starts as a unit
// (weight, cost of its parent edge). The unit with the largest weight/cost
// ratio (ties: smallest head vertex) is appended to its parent's unit; units
// reaching the root are appended to the search.
std::vector<int> ExpandingSearchBestResponse(const Tree& tree,
                                             std::span<const double> weights);

// Expanding search on a tree; payoff is the search cost.
class ExpTreeGame : public Game {
 public:
  explicit ExpTreeGame(Tree tree);

  std::string name() const override { return "exp_tree"; }
  int num_rows() const override { return tree_.num_rows(); }
  double max_payoff() const override { return tree_.total_cost(); }
  double alpha() const override { return 1.0; }
  double Payoff(int row, const PureResponse& response) const override;
  std::vector<double> Column(const PureResponse& response) const override;
  PureResponse ComputeBestResponse(const RowStrategy& x) const override;
  std::vector<PureResponse> EnumerateResponses(std::size_t cap) const override;

  const Tree& tree() const { return tree_; }

 private:
  Tree tree_;
};

// Expanding search ratio: search cost divided by d(v).
class ExprTreeGame : public Game {
 public:
  explicit ExprTreeGame(Tree tree);

  std::string name() const override { return "expr_tree"; }
  int num_rows() const override { return tree_.num_rows(); }
  double max_payoff() const override { return max_payoff_; }
  double alpha() const override { return 1.0; }
  double Payoff(int row, const PureResponse& response) const override;
  std::vector<double> Column(const PureResponse& response) const override;
  // Reweights p(v) to p(v)/d(v), normalizes, and solves the search-cost
  // problem for that distribution.
  PureResponse ComputeBestResponse(const RowStrategy& x) const override;
  std::vector<PureResponse> EnumerateResponses(std::size_t cap) const override;

  const Tree& tree() const { return tree_; }

 private:
  Tree tree_;
  double max_payoff_ = 0.0;
};

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_TREE_GAME_H_

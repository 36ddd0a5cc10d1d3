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
#include "oracle_games/games/tree_game.h"

#include <algorithm>
#include <cmath>
#include <queue>

#include "oracle_games/errors.h"
#include "oracle_games/games/enumeration.h"

namespace oracle_games {

Tree::Tree(int num_vertices, int root, std::vector<TreeEdge> edges)
    : num_vertices_(num_vertices), root_(root), edges_(std::move(edges)) {
  if (num_vertices_ < 2) throw ConfigError("tree needs at least two vertices");
  if (root_ < 0 || root_ >= num_vertices_) {
    throw ConfigError("root out of range");
  }
  if (static_cast<int>(edges_.size()) != num_vertices_ - 1) {
    throw ConfigError("a tree on " + std::to_string(num_vertices_) +
                      " vertices has " + std::to_string(num_vertices_ - 1) +
                      " edges, got " + std::to_string(edges_.size()));
  }
  std::vector<std::vector<int>> incident(num_vertices_);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const TreeEdge& edge = edges_[e];
    if (edge.u < 0 || edge.u >= num_vertices_ || edge.v < 0 ||
        edge.v >= num_vertices_ || edge.u == edge.v) {
      throw ConfigError("edge " + std::to_string(e) + " has bad endpoints");
    }
    if (!(edge.cost > 0.0) || !std::isfinite(edge.cost)) {
      throw ConfigError("edge costs must be finite and positive");
    }
    incident[edge.u].push_back(e);
    incident[edge.v].push_back(e);
    total_cost_ += edge.cost;
  }
  parent_.assign(num_vertices_, -1);
  parent_edge_.assign(num_vertices_, -1);
  edge_child_.assign(edges_.size(), -1);
  depth_.assign(num_vertices_, 0.0);
  std::vector<bool> seen(num_vertices_, false);
  std::queue<int> queue;
  seen[root_] = true;
  queue.push(root_);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int e : incident[u]) {
      const int w = edges_[e].u == u ? edges_[e].v : edges_[e].u;
      if (seen[w]) {
        if (e != parent_edge_[u]) throw ConfigError("graph has a cycle");
        continue;
      }
      seen[w] = true;
      parent_[w] = u;
      parent_edge_[w] = e;
      edge_child_[e] = w;
      depth_[w] = depth_[u] + edges_[e].cost;
      queue.push(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ConfigError("graph is not connected");
  }
  vertex_row_.assign(num_vertices_, -1);
  for (int v = 0; v < num_vertices_; ++v) {
    if (v == root_) continue;
    vertex_row_[v] = row_vertex_.size();
    row_vertex_.push_back(v);
  }
}

void Tree::CheckExpandingSearch(const std::vector<int>& sequence) const {
  if (sequence.size() != edges_.size()) {
    throw ContractError("expanding search must list all " +
                        std::to_string(edges_.size()) + " edges");
  }
  std::vector<bool> reached(num_vertices_, false);
  std::vector<bool> used(edges_.size(), false);
  reached[root_] = true;
  for (int e : sequence) {
    if (e < 0 || e >= static_cast<int>(edges_.size()) || used[e]) {
      throw ContractError("edge sequence repeats or names a bad edge");
    }
    if (!reached[parent_[edge_child_[e]]]) {
      throw ContractError("edge " + std::to_string(e) +
                          " is not adjacent to the searched region");
    }
    used[e] = true;
    reached[edge_child_[e]] = true;
  }
}

std::vector<double> Tree::SearchCosts(const std::vector<int>& sequence) const {
  CheckExpandingSearch(sequence);
  std::vector<double> costs(num_rows());
  double total = 0.0;
  // The first edge incident to a non-root vertex is always its parent edge.
  for (int e : sequence) {
    total += edges_[e].cost;
    costs[vertex_row_[edge_child_[e]]] = total;
  }
  return costs;
}

std::vector<std::vector<int>> Tree::AllExpandingSearches(
    std::size_t cap) const {
  if (num_rows() > kMaxExpandingSearchRows) {
    throw SizeError("expanding search enumeration with " +
                        std::to_string(num_rows()) +
                        " hiders exceeds the family limit",
                    std::nullopt);
  }
  // Expanding searches of a tree are the linear extensions of the edge order
  // "parent edge before child edge".
  std::vector<std::vector<int>> predecessors(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const int up = parent_[edge_child_[e]];
    if (up != root_) predecessors[e].push_back(parent_edge_[up]);
  }
  return AllLinearExtensions(predecessors, cap);
}

std::vector<int> ExpandingSearchBestResponse(const Tree& tree,
                                             std::span<const double> weights) {
  const int num_vertices = tree.num_vertices();
  const int root = tree.root();
  std::vector<double> unit_weight(num_vertices, 0.0);
  std::vector<double> unit_cost(num_vertices, 0.0);
  std::vector<std::vector<int>> unit_vertices(num_vertices);
  std::vector<int> owner(num_vertices);
  std::vector<bool> active(num_vertices, false);
  for (int v = 0; v < num_vertices; ++v) {
    owner[v] = v;
    if (v == root) continue;
    unit_weight[v] = weights[tree.RowOfVertex(v)];
    unit_cost[v] = tree.edges()[tree.ParentEdge(v)].cost;
    unit_vertices[v] = {v};
    active[v] = true;
  }
  auto find = [&owner](int v) {
    while (owner[v] != v) {
      owner[v] = owner[owner[v]];
      v = owner[v];
    }
    return v;
  };
  for (int step = 0; step < tree.num_rows(); ++step) {
    int pick = -1;
    for (int u = 0; u < num_vertices; ++u) {
      if (!active[u]) continue;
      if (pick < 0 || unit_weight[u] * unit_cost[pick] >
                          unit_weight[pick] * unit_cost[u]) {
        pick = u;
      }
    }
    const int target = find(tree.Parent(pick));
    auto& into = unit_vertices[target];
    into.insert(into.end(), unit_vertices[pick].begin(),
                unit_vertices[pick].end());
    unit_weight[target] += unit_weight[pick];
    unit_cost[target] += unit_cost[pick];
    active[pick] = false;
    owner[pick] = target;
  }
  std::vector<int> sequence;
  sequence.reserve(tree.num_rows());
  for (int v : unit_vertices[root]) sequence.push_back(tree.ParentEdge(v));
  return sequence;
}

namespace {

const std::vector<int>& CheckedSequence(const PureResponse& response) {
  if (response.kind() != ResponseKind::kEdgeSequence) {
    throw ContractError("tree game expects an edge sequence, got " +
                        response.key());
  }
  return response.items();
}

std::vector<PureResponse> WrapSequences(std::vector<std::vector<int>> all) {
  std::vector<PureResponse> out;
  out.reserve(all.size());
  for (auto& seq : all) out.push_back(PureResponse::EdgeSequence(std::move(seq)));
  return out;
}

}  // namespace

ExpTreeGame::ExpTreeGame(Tree tree) : tree_(std::move(tree)) {}

double ExpTreeGame::Payoff(int row, const PureResponse& response) const {
  CheckRow(row);
  return tree_.SearchCosts(CheckedSequence(response))[row];
}

std::vector<double> ExpTreeGame::Column(const PureResponse& response) const {
  return tree_.SearchCosts(CheckedSequence(response));
}

PureResponse ExpTreeGame::ComputeBestResponse(const RowStrategy& x) const {
  return PureResponse::EdgeSequence(
      ExpandingSearchBestResponse(tree_, ToDense(x, num_rows())));
}

std::vector<PureResponse> ExpTreeGame::EnumerateResponses(
    std::size_t cap) const {
  return WrapSequences(tree_.AllExpandingSearches(cap));
}

ExprTreeGame::ExprTreeGame(Tree tree) : tree_(std::move(tree)) {
  double closest = tree_.total_cost();
  for (int row = 0; row < tree_.num_rows(); ++row) {
    closest = std::min(closest, tree_.Depth(tree_.VertexOfRow(row)));
  }
  max_payoff_ = tree_.total_cost() / closest;
}

double ExprTreeGame::Payoff(int row, const PureResponse& response) const {
  CheckRow(row);
  return tree_.SearchCosts(CheckedSequence(response))[row] /
         tree_.Depth(tree_.VertexOfRow(row));
}

std::vector<double> ExprTreeGame::Column(const PureResponse& response) const {
  std::vector<double> column = tree_.SearchCosts(CheckedSequence(response));
  for (int row = 0; row < num_rows(); ++row) {
    column[row] /= tree_.Depth(tree_.VertexOfRow(row));
  }
  return column;
}

PureResponse ExprTreeGame::ComputeBestResponse(const RowStrategy& x) const {
  std::vector<RowStrategy::Entry> scaled;
  for (const auto& [row, p] : x.entries()) {
    scaled.emplace_back(row, p / tree_.Depth(tree_.VertexOfRow(row)));
  }
  const RowStrategy reweighted = RowStrategy::Normalize(scaled);
  return PureResponse::EdgeSequence(
      ExpandingSearchBestResponse(tree_, ToDense(reweighted, num_rows())));
}

std::vector<PureResponse> ExprTreeGame::EnumerateResponses(
    std::size_t cap) const {
  return WrapSequences(tree_.AllExpandingSearches(cap));
}

}  // namespace oracle_games

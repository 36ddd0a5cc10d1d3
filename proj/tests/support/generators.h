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


#ifndef ORACLE_GAMES_TESTS_SUPPORT_GENERATORS_H_
#define ORACLE_GAMES_TESTS_SUPPORT_GENERATORS_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "oracle_games/games/matrix_game.h"
#include "oracle_games/games/tree_game.h"
#include "oracle_games/mixed_strategy.h"

namespace oracle_games::testing {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
int UniformInt(Rng& rng, int lo, int hi);
double UniformReal(Rng& rng, double lo, double hi);

// Integer costs in [lo, hi], stored as doubles.
std::vector<double> RandomIntegerCosts(Rng& rng, int n, int lo = 1,
                                       int hi = 10);

// A point of the simplex. With 'sparse' set some coordinates are zeroed
// (never all of them).
std::vector<double> RandomSimplexPoint(Rng& rng, int n, bool sparse = false);
RowStrategy RandomRowStrategy(Rng& rng, int n, bool sparse = false);

// n x m matrix with integer entries in [0, hi]; every column has a positive
// entry.
Matrix RandomMatrix(Rng& rng, int n, int m, int hi = 10);
// Same with real entries in [0, hi).
Matrix RandomRealMatrix(Rng& rng, int n, int m, double hi = 1.0);

// Acyclic edges on [0, n): each pair (a, b), a < b in a random relabeling,
// is kept with probability 'density'.
std::vector<std::pair<int, int>> RandomDag(Rng& rng, int n, double density);

struct RandomTreeSpec {
  int num_vertices = 0;
  int root = 0;
  std::vector<TreeEdge> edges;
};

// Random rooted tree with 'hiders' non-root vertices, integer edge costs in
// [1, max_cost], shuffled labels, edge order and endpoint orientation.
RandomTreeSpec RandomTree(Rng& rng, int hiders, int max_cost = 5);
Tree BuildTree(const RandomTreeSpec& spec);

}  // namespace oracle_games::testing

#endif  // ORACLE_GAMES_TESTS_SUPPORT_GENERATORS_H_

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

#ifndef ORACLE_GAMES_INSTANCE_IO_H_
#define ORACLE_GAMES_INSTANCE_IO_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "oracle_games/game.h"
#include "oracle_games/games/matrix_game.h"
#include "oracle_games/games/tree_game.h"

namespace oracle_games {

using Json = nlohmann::ordered_json;

struct BoxSpec {
  std::vector<double> costs;
  friend bool operator==(const BoxSpec&, const BoxSpec&) = default;
};

struct PrecSpec {
  std::vector<double> costs;
  std::vector<std::pair<int, int>> edges;  // (before, after)
  friend bool operator==(const PrecSpec&, const PrecSpec&) = default;
};

// values[mask] = f(S) for the subset S encoded by mask; values[0] = 0.
struct SubTabulatedSpec {
  int n = 0;
  std::vector<double> values;
  friend bool operator==(const SubTabulatedSpec&,
                         const SubTabulatedSpec&) = default;
};

struct TreeSpec {
  bool ratio = false;  // expr_tree when set, exp_tree otherwise
  int num_vertices = 0;
  int root = 0;
  std::vector<TreeEdge> edges;
  friend bool operator==(const TreeSpec&, const TreeSpec&) = default;
};

struct HspeSpec {
  std::vector<double> costs;
  std::vector<double> capture;
  double budget = 0.0;
  std::optional<double> oracle_epsilon;
  friend bool operator==(const HspeSpec&, const HspeSpec&) = default;
};

struct MatrixSpec {
  Matrix payoffs;
  friend bool operator==(const MatrixSpec&, const MatrixSpec&) = default;
};

struct GameInstanceSpec;

struct RegretSpec {
  std::vector<double> weights;
  std::shared_ptr<const GameInstanceSpec> base;
  friend bool operator==(const RegretSpec& a, const RegretSpec& b);
};

// A serializable description of one game instance.
struct GameInstanceSpec {
  std::variant<BoxSpec, PrecSpec, SubTabulatedSpec, TreeSpec, HspeSpec,
               MatrixSpec, RegretSpec>
      payload;

  // "box", "prec", "sub_modular_tabulated", "exp_tree", "expr_tree", "hspe",
  // "matrix" or "regret".
  std::string tag() const;
  friend bool operator==(const GameInstanceSpec&,
                         const GameInstanceSpec&) = default;
};

inline constexpr int kMaxTabulatedSubRows = 12;

// Structural conversion. Throws ValidationError naming the offending JSON
// path, e.g. "$.base.costs[2]".
GameInstanceSpec SpecFromJson(const Json& document);
Json SpecToJson(const GameInstanceSpec& spec);

// Parses and fully validates (every game constructor runs). Syntax errors
// raise ParseError with line and column; semantic ones raise ValidationError.
GameInstanceSpec ParseInstanceText(std::string_view text);
GameInstanceSpec ParseInstanceFile(const std::string& path);

// Pretty-printed document followed by a newline.
std::string WriteInstance(const GameInstanceSpec& spec);

// Throws ValidationError on constructor failures, prefixed with the path of
// the offending spec object.
std::shared_ptr<const Game> BuildGame(const GameInstanceSpec& spec);

// Parses text as JSON, mapping syntax errors to ParseError with line and
// column.
Json ParseJsonText(std::string_view text);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_INSTANCE_IO_H_

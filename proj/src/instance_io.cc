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

#include "oracle_games/instance_io.h"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "oracle_games/errors.h"
#include "oracle_games/games/box_game.h"
#include "oracle_games/games/hspe_game.h"
#include "oracle_games/games/prec_game.h"
#include "oracle_games/games/regret_game.h"
#include "oracle_games/games/sub_game.h"

namespace oracle_games {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string Field(const std::string& path, std::string_view key) {
  return path + "." + std::string(key);
}

void RequireKeys(const Json& object, const std::string& path,
                 std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  for (std::string_view key : required) {
    if (!object.contains(key)) Fail(path, "missing field '" + std::string(key) + "'");
  }
  for (const auto& item : object.items()) {
    bool known = false;
    for (std::string_view key : required) known = known || item.key() == key;
    for (std::string_view key : optional) known = known || item.key() == key;
    if (!known) Fail(path, "unknown field '" + item.key() + "'");
  }
}

double ReadNumber(const Json& value, const std::string& path) {
  if (!value.is_number()) Fail(path, "expected a number");
  const double number = value.get<double>();
  if (!std::isfinite(number)) Fail(path, "expected a finite number");
  return number;
}

int ReadInt(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) Fail(path, "expected an integer");
  const auto number = value.get<long long>();
  if (number < -(1LL << 30) || number > (1LL << 30)) {
    Fail(path, "integer out of range");
  }
  return static_cast<int>(number);
}

const Json& ReadArray(const Json& value, const std::string& path) {
  if (!value.is_array()) Fail(path, "expected an array");
  return value;
}

std::vector<double> ReadNumbers(const Json& value, const std::string& path) {
  std::vector<double> numbers;
  const Json& array = ReadArray(value, path);
  for (std::size_t i = 0; i < array.size(); ++i) {
    numbers.push_back(ReadNumber(array[i], Index(path, i)));
  }
  return numbers;
}

std::vector<double> ReadPositive(const Json& value, const std::string& path) {
  std::vector<double> numbers = ReadNumbers(value, path);
  if (numbers.empty()) Fail(path, "must not be empty");
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (!(numbers[i] > 0.0)) Fail(Index(path, i), "must be positive");
  }
  return numbers;
}

GameInstanceSpec ReadSpec(const Json& object, const std::string& path);

TreeSpec ReadTree(const Json& object, const std::string& path, bool ratio) {
  RequireKeys(object, path, {"game", "num_vertices", "root", "edges"});
  TreeSpec tree;
  tree.ratio = ratio;
  tree.num_vertices = ReadInt(object["num_vertices"], Field(path, "num_vertices"));
  tree.root = ReadInt(object["root"], Field(path, "root"));
  const std::string edges_path = Field(path, "edges");
  const Json& edges = ReadArray(object["edges"], edges_path);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string edge_path = Index(edges_path, e);
    const Json& edge = ReadArray(edges[e], edge_path);
    if (edge.size() != 3) Fail(edge_path, "expected [u, v, cost]");
    tree.edges.push_back({ReadInt(edge[0], Index(edge_path, 0)),
                          ReadInt(edge[1], Index(edge_path, 1)),
                          ReadNumber(edge[2], Index(edge_path, 2))});
  }
  return tree;
}

GameInstanceSpec ReadSpec(const Json& object, const std::string& path) {
  if (!object.is_object()) Fail(path, "expected an object");
  if (!object.contains("game")) Fail(path, "missing field 'game'");
  if (!object["game"].is_string()) Fail(Field(path, "game"), "expected a string");
  const std::string tag = object["game"].get<std::string>();
  GameInstanceSpec spec;
  if (tag == "box") {
    RequireKeys(object, path, {"game", "costs"});
    spec.payload = BoxSpec{ReadPositive(object["costs"], Field(path, "costs"))};
  } else if (tag == "prec") {
    RequireKeys(object, path, {"game", "costs"}, {"edges"});
    PrecSpec prec;
    prec.costs = ReadPositive(object["costs"], Field(path, "costs"));
    if (object.contains("edges")) {
      const std::string edges_path = Field(path, "edges");
      const Json& edges = ReadArray(object["edges"], edges_path);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string edge_path = Index(edges_path, e);
        const Json& edge = ReadArray(edges[e], edge_path);
        if (edge.size() != 2) Fail(edge_path, "expected [before, after]");
        prec.edges.emplace_back(ReadInt(edge[0], Index(edge_path, 0)),
                                ReadInt(edge[1], Index(edge_path, 1)));
      }
    }
    spec.payload = std::move(prec);
  } else if (tag == "sub_modular_tabulated") {
    RequireKeys(object, path, {"game", "n", "values"});
    SubTabulatedSpec sub;
    sub.n = ReadInt(object["n"], Field(path, "n"));
    if (sub.n < 1 || sub.n > kMaxTabulatedSubRows) {
      Fail(Field(path, "n"), "must lie in [1, " +
                                 std::to_string(kMaxTabulatedSubRows) + "]");
    }
    sub.values = ReadNumbers(object["values"], Field(path, "values"));
    if (sub.values.size() != (std::size_t{1} << sub.n)) {
      Fail(Field(path, "values"), "expected 2^n entries");
    }
    spec.payload = std::move(sub);
  } else if (tag == "exp_tree" || tag == "expr_tree") {
    spec.payload = ReadTree(object, path, tag == "expr_tree");
  } else if (tag == "hspe") {
    RequireKeys(object, path, {"game", "costs", "capture", "budget"}, {"oracle"});
    HspeSpec hspe;
    hspe.costs = ReadPositive(object["costs"], Field(path, "costs"));
    hspe.capture = ReadNumbers(object["capture"], Field(path, "capture"));
    for (std::size_t i = 0; i < hspe.capture.size(); ++i) {
      if (!(hspe.capture[i] > 0.0 && hspe.capture[i] <= 1.0)) {
        Fail(Index(Field(path, "capture"), i), "must lie in (0, 1]");
      }
    }
    if (hspe.capture.size() != hspe.costs.size()) {
      Fail(Field(path, "capture"), "needs one entry per location");
    }
    hspe.budget = ReadNumber(object["budget"], Field(path, "budget"));
    if (object.contains("oracle")) {
      const std::string oracle_path = Field(path, "oracle");
      const Json& oracle = object["oracle"];
      if (!oracle.is_object()) Fail(oracle_path, "expected an object");
      RequireKeys(oracle, oracle_path, {}, {"eps"});
      if (oracle.contains("eps")) {
        hspe.oracle_epsilon = ReadNumber(oracle["eps"], Field(oracle_path, "eps"));
      }
    }
    spec.payload = std::move(hspe);
  } else if (tag == "matrix") {
    RequireKeys(object, path, {"game", "payoffs"});
    MatrixSpec matrix;
    const std::string rows_path = Field(path, "payoffs");
    const Json& rows = ReadArray(object["payoffs"], rows_path);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      matrix.payoffs.push_back(ReadNumbers(rows[i], Index(rows_path, i)));
    }
    spec.payload = std::move(matrix);
  } else if (tag == "regret") {
    RequireKeys(object, path, {"game", "weights", "base"});
    RegretSpec regret;
    regret.weights = ReadPositive(object["weights"], Field(path, "weights"));
    regret.base = std::make_shared<const GameInstanceSpec>(
        ReadSpec(object["base"], Field(path, "base")));
    spec.payload = std::move(regret);
  } else {
    Fail(Field(path, "game"), "unknown game '" + tag + "'");
  }
  return spec;
}

std::shared_ptr<const Game> Build(const GameInstanceSpec& spec,
                                  const std::string& path) {
  if (const auto* regret = std::get_if<RegretSpec>(&spec.payload)) {
    if (!regret->base) Fail(path, "regret spec has no base");
    std::shared_ptr<const Game> base = Build(*regret->base, Field(path, "base"));
    try {
      return std::make_shared<RegretGame>(std::move(base), regret->weights);
    } catch (const ConfigError& error) {
      Fail(path, error.what());
    }
  }
  try {
    return std::visit(
        [](const auto& payload) -> std::shared_ptr<const Game> {
          using T = std::decay_t<decltype(payload)>;
          if constexpr (std::is_same_v<T, BoxSpec>) {
            return std::make_shared<BoxGame>(payload.costs);
          } else if constexpr (std::is_same_v<T, PrecSpec>) {
            return std::make_shared<PrecGame>(payload.costs, payload.edges);
          } else if constexpr (std::is_same_v<T, SubTabulatedSpec>) {
            return std::make_shared<SubGame>(
                SubGame::Tabulated(payload.n, payload.values));
          } else if constexpr (std::is_same_v<T, TreeSpec>) {
            Tree tree(payload.num_vertices, payload.root, payload.edges);
            if (payload.ratio) return std::make_shared<ExprTreeGame>(tree);
            return std::make_shared<ExpTreeGame>(tree);
          } else if constexpr (std::is_same_v<T, HspeSpec>) {
            return std::make_shared<HspeGame>(
                payload.costs, payload.capture, payload.budget,
                payload.oracle_epsilon.value_or(0.01));
          } else if constexpr (std::is_same_v<T, MatrixSpec>) {
            return std::make_shared<MatrixGame>(payload.payoffs);
          } else {
            throw InternalError("regret spec reached the generic builder");
          }
        },
        spec.payload);
  } catch (const ConfigError& error) {
    Fail(path, error.what());
  } catch (const ContractError& error) {
    Fail(path, error.what());
  }
}

Json NumbersJson(const std::vector<double>& numbers) {
  Json array = Json::array();
  for (double value : numbers) array.push_back(value);
  return array;
}

}  // namespace

bool operator==(const RegretSpec& a, const RegretSpec& b) {
  if (a.weights != b.weights) return false;
  if (!a.base || !b.base) return a.base == b.base;
  return *a.base == *b.base;
}

std::string GameInstanceSpec::tag() const {
  return std::visit(
      [](const auto& payload) -> std::string {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, BoxSpec>) return "box";
        if constexpr (std::is_same_v<T, PrecSpec>) return "prec";
        if constexpr (std::is_same_v<T, SubTabulatedSpec>) {
          return "sub_modular_tabulated";
        }
        if constexpr (std::is_same_v<T, TreeSpec>) {
          return payload.ratio ? "expr_tree" : "exp_tree";
        }
        if constexpr (std::is_same_v<T, HspeSpec>) return "hspe";
        if constexpr (std::is_same_v<T, MatrixSpec>) return "matrix";
        return "regret";
      },
      payload);
}

GameInstanceSpec SpecFromJson(const Json& document) {
  return ReadSpec(document, "$");
}

Json SpecToJson(const GameInstanceSpec& spec) {
  Json out;
  out["game"] = spec.tag();
  std::visit(
      [&out](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, BoxSpec>) {
          out["costs"] = NumbersJson(payload.costs);
        } else if constexpr (std::is_same_v<T, PrecSpec>) {
          out["costs"] = NumbersJson(payload.costs);
          Json edges = Json::array();
          for (const auto& [before, after] : payload.edges) {
            edges.push_back(Json::array({before, after}));
          }
          out["edges"] = std::move(edges);
        } else if constexpr (std::is_same_v<T, SubTabulatedSpec>) {
          out["n"] = payload.n;
          out["values"] = NumbersJson(payload.values);
        } else if constexpr (std::is_same_v<T, TreeSpec>) {
          out["num_vertices"] = payload.num_vertices;
          out["root"] = payload.root;
          Json edges = Json::array();
          for (const TreeEdge& edge : payload.edges) {
            edges.push_back(Json::array({edge.u, edge.v, edge.cost}));
          }
          out["edges"] = std::move(edges);
        } else if constexpr (std::is_same_v<T, HspeSpec>) {
          out["costs"] = NumbersJson(payload.costs);
          out["capture"] = NumbersJson(payload.capture);
          out["budget"] = payload.budget;
          if (payload.oracle_epsilon) {
            out["oracle"] = Json{{"eps", *payload.oracle_epsilon}};
          }
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          Json rows = Json::array();
          for (const auto& row : payload.payoffs) rows.push_back(NumbersJson(row));
          out["payoffs"] = std::move(rows);
        } else {
          out["weights"] = NumbersJson(payload.weights);
          out["base"] = payload.base ? SpecToJson(*payload.base) : Json();
        }
      },
      spec.payload);
  return out;
}

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& error) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(
        error.byte == 0 ? 0 : error.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": malformed JSON");
  }
}

GameInstanceSpec ParseInstanceText(std::string_view text) {
  GameInstanceSpec spec = SpecFromJson(ParseJsonText(text));
  BuildGame(spec);
  return spec;
}

GameInstanceSpec ParseInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseInstanceText(buffer.str());
  } catch (const ParseError& error) {
    throw ParseError(path + ": " + error.what());
  } catch (const ValidationError& error) {
    throw ValidationError(path + ": " + error.what());
  }
}

std::string WriteInstance(const GameInstanceSpec& spec) {
  return SpecToJson(spec).dump(2) + "\n";
}

std::shared_ptr<const Game> BuildGame(const GameInstanceSpec& spec) {
  return Build(spec, "$");
}

}  // namespace oracle_games

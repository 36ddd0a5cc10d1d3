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

#ifndef ORACLE_GAMES_PURE_RESPONSE_H_
#define ORACLE_GAMES_PURE_RESPONSE_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oracle_games {

enum class ResponseKind {
  kPermutation,   // search order over boxes/locations
  kEdgeSequence,  // expanding search, edge identifiers in search order
  kSubset,        // set of searched locations, stored sorted
  kColumn,        // column index of an explicit matrix
};

// A pure strategy of the column player (the Searcher). The canonical key is
// also the textual form written to reports: "perm:2,0,1", "edges:0,2,1",
// "subset:0,3", "col:4". Two responses compare equal iff their keys do.
class PureResponse {
 public:
  PureResponse(ResponseKind kind, std::vector<int> items);

  static PureResponse Permutation(std::vector<int> order) {
    return PureResponse(ResponseKind::kPermutation, std::move(order));
  }
  static PureResponse EdgeSequence(std::vector<int> edges) {
    return PureResponse(ResponseKind::kEdgeSequence, std::move(edges));
  }
  // Sorts and rejects duplicates.
  static PureResponse Subset(std::vector<int> members);
  static PureResponse Column(int column) {
    return PureResponse(ResponseKind::kColumn, {column});
  }

  // Inverse of key(). Throws ParseError.
  static PureResponse Parse(std::string_view text);

  ResponseKind kind() const { return kind_; }
  const std::vector<int>& items() const { return items_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const PureResponse& a, const PureResponse& b) {
    return a.key_ == b.key_;
  }
  friend bool operator<(const PureResponse& a, const PureResponse& b) {
    return a.key_ < b.key_;
  }

 private:
  ResponseKind kind_;
  std::vector<int> items_;
  std::string key_;
};

std::string_view KindPrefix(ResponseKind kind);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_PURE_RESPONSE_H_

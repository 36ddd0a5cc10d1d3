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

#include "oracle_games/pure_response.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "oracle_games/errors.h"

namespace oracle_games {

std::string_view KindPrefix(ResponseKind kind) {
  switch (kind) {
    case ResponseKind::kPermutation:
      return "perm";
    case ResponseKind::kEdgeSequence:
      return "edges";
    case ResponseKind::kSubset:
      return "subset";
    case ResponseKind::kColumn:
      return "col";
  }
  return "?";
}

PureResponse::PureResponse(ResponseKind kind, std::vector<int> items)
    : kind_(kind), items_(std::move(items)) {
  if (kind_ == ResponseKind::kColumn && items_.size() != 1) {
    throw ContractError("column response must carry exactly one index");
  }
  key_ = std::string(KindPrefix(kind_));
  key_ += ':';
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) key_ += ',';
    key_ += std::to_string(items_[i]);
  }
}

PureResponse PureResponse::Subset(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw ContractError("subset response has a repeated member");
  }
  return PureResponse(ResponseKind::kSubset, std::move(members));
}

PureResponse PureResponse::Parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("response '" + std::string(text) + "' has no kind prefix");
  }
  const std::string_view prefix = text.substr(0, colon);
  ResponseKind kind;
  if (prefix == "perm") {
    kind = ResponseKind::kPermutation;
  } else if (prefix == "edges") {
    kind = ResponseKind::kEdgeSequence;
  } else if (prefix == "subset") {
    kind = ResponseKind::kSubset;
  } else if (prefix == "col") {
    kind = ResponseKind::kColumn;
  } else {
    throw ParseError("unknown response kind '" + std::string(prefix) + "'");
  }
  std::vector<int> items;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad integer '" + std::string(token) + "' in response");
    }
    items.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw ParseError("trailing comma in response");
  }
  if (kind == ResponseKind::kSubset) return Subset(std::move(items));
  return PureResponse(kind, std::move(items));
}

}  // namespace oracle_games

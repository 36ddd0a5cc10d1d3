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
#include "oracle_games/games/brute_force.h"

#include <optional>
#include <vector>

#include "oracle_games/errors.h"

namespace oracle_games {

BestResponse BruteForceBestResponse(const Game& game, const RowStrategy& x,
                                    std::size_t cap) {
  const std::vector<double> dense = ToDense(x, game.num_rows());
  // Sums of equal payoffs taken in different orders may round apart.
  const double tie = 1e-12 * game.max_payoff();
  std::optional<BestResponse> best;
  for (PureResponse& response : game.EnumerateResponses(cap)) {
    const std::vector<double> column = game.Column(response);
    double value = 0.0;
    for (int i = 0; i < game.num_rows(); ++i) value += dense[i] * column[i];
    if (!best || value < best->payoff - tie ||
        (value <= best->payoff + tie && response < best->response)) {
      best = BestResponse{std::move(response), value, 1.0};
    }
  }
  if (!best) throw InternalError(game.name() + " enumerated no responses");
  return *best;
}

}  // namespace oracle_games

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
#ifndef ORACLE_GAMES_GAMES_BRUTE_FORCE_H_
#define ORACLE_GAMES_GAMES_BRUTE_FORCE_H_

#include <cstddef>

#include "oracle_games/game.h"
#include "oracle_games/games/enumeration.h"

namespace oracle_games {

// Exact best response by exhausting game.EnumerateResponses(cap). Values
// within 1e-12 * mu of each other count as tied; ties go to
// the smallest canonical key. The result carries alpha = 1.
BestResponse BruteForceBestResponse(const Game& game, const RowStrategy& x,
                                    std::size_t cap = kDefaultEnumerationCap);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_BRUTE_FORCE_H_

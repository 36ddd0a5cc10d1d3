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
#ifndef ORACLE_GAMES_GAMES_ENUMERATION_H_
#define ORACLE_GAMES_GAMES_ENUMERATION_H_

#include <cstddef>
#include <vector>

namespace oracle_games {

// Largest n for which each response family may be enumerated.
inline constexpr int kMaxPermutationRows = 9;
inline constexpr int kMaxLinearExtensionRows = 8;
inline constexpr int kMaxExpandingSearchRows = 7;
inline constexpr int kMaxSubsetRows = 20;

// Default cap on the number of enumerated responses.
inline constexpr std::size_t kDefaultEnumerationCap = 400000;

// Throws ContractError unless order is a permutation of [0, n).
void CheckPermutation(const std::vector<int>& order, int n);

// Position of each element in order, i.e. the inverse permutation.
std::vector<int> InversePermutation(const std::vector<int>& order);

// All n! permutations in lexicographic order. SizeError when n exceeds
// kMaxPermutationRows or n! exceeds cap.
std::vector<std::vector<int>> AllPermutations(int n, std::size_t cap);

// All orders of [0, n) in which every element follows its predecessors,
// lexicographic. predecessors[i] lists the elements that must precede i.
std::vector<std::vector<int>> AllLinearExtensions(
    const std::vector<std::vector<int>>& predecessors, std::size_t cap);

}  // namespace oracle_games

#endif  // ORACLE_GAMES_GAMES_ENUMERATION_H_

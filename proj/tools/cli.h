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


#ifndef ORACLE_GAMES_TOOLS_CLI_H_
#define ORACLE_GAMES_TOOLS_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oracle_games/game.h"
#include "oracle_games/games/enumeration.h"
#include "oracle_games/instance_io.h"

namespace oracle_games::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitGuaranteeViolation = 2;

struct SolveOptions {
  std::string algorithm = "mwu";  // mwu, ellipsoid or lp-exact
  double epsilon = 0.1;
  // Grid step relative to mu; the solver default applies when unset.
  std::optional<double> gamma;
  std::string mode = "both";  // p1, p2 or both
  std::size_t cap = kDefaultEnumerationCap;
  bool verify = false;
  double tolerance = kDefaultTolerance;
};

struct SolveOutcome {
  Json report;
  int exit_code = kExitOk;
};

// Runs one solver and assembles the report document. The report never echoes
// the instance, so equivalent games produce identical reports.
SolveOutcome Solve(const Game& game, const SolveOptions& options);

struct OracleOptions {
  std::vector<double> x;
  bool brute = false;
  std::size_t cap = kDefaultEnumerationCap;
  double tolerance = kDefaultTolerance;
};

SolveOutcome QueryOracle(const Game& game, const OracleOptions& options);

// Report text with the timing field removed, for comparisons.
std::string StripTiming(const Json& report);

// Value of OG_TOLERANCE, or the default. Throws ConfigError when malformed.
double ToleranceFromEnvironment();

// Full command-line entry point. args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace oracle_games::cli

#endif  // ORACLE_GAMES_TOOLS_CLI_H_

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


#include "cli.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "oracle_games/ellipsoid_solver.h"
#include "oracle_games/errors.h"
#include "oracle_games/games/brute_force.h"
#include "oracle_games/games/hspe_game.h"
#include "oracle_games/mwu_solver.h"
#include "oracle_games/verify.h"

namespace oracle_games::cli {
namespace {

using Clock = std::chrono::steady_clock;

Json RowJson(const RowStrategy& x) {
  Json entries = Json::array();
  for (const auto& [row, weight] : x.entries()) {
    entries.push_back(Json{{"row", row}, {"p", weight}});
  }
  return entries;
}

Json ColumnJson(const ColumnStrategy& y) {
  Json entries = Json::array();
  for (const auto& [response, weight] : y.entries()) {
    entries.push_back(Json{{"response", response.key()}, {"p", weight}});
  }
  return entries;
}

MwuMode ParseMode(const std::string& mode) {
  if (mode == "p1") return MwuMode::kPlayerOne;
  if (mode == "p2") return MwuMode::kPlayerTwo;
  if (mode == "both") return MwuMode::kBoth;
  throw ConfigError("unknown mode '" + mode + "'");
}

constexpr double kUnchecked = std::numeric_limits<double>::infinity();

struct Solution {
  RowStrategy x_hat;
  ColumnStrategy y_hat;
  // Ratio bounds for verification; kUnchecked where nothing is promised.
  double bound1 = 0.0;
  double bound2 = 0.0;
};

Json BoundJson(double bound) {
  return std::isinf(bound) ? Json(nullptr) : Json(bound);
}

// Ratio bound for the ellipsoid output: v_final >= V* - gamma and the row
// strategy keeps v_final / alpha up to 1e-4 mu.
double EllipsoidBound(double alpha, double v_star, double gamma, double mu) {
  const double denominator = v_star - gamma - alpha * 1e-4 * mu;
  if (!(denominator > 0.0)) return std::numeric_limits<double>::infinity();
  return alpha * v_star / denominator + 1e-6;
}

void Verify(const Game& game, const SolveOptions& options,
            const Solution& solution, double gamma, SolveOutcome& outcome) {
  const GuaranteeReport report =
      EvaluateGuarantees(game, solution.x_hat, solution.y_hat, options.cap);
  double bound1 = solution.bound1;
  double bound2 = solution.bound2;
  if (options.algorithm == "ellipsoid") {
    bound1 = bound2 = EllipsoidBound(game.alpha(), report.v_star, gamma,
                                     game.max_payoff());
  }
  Json& out = outcome.report;
  out["v_star"] = report.v_star;
  Json ratios;
  ratios["player1_worst"] = report.player1_worst;
  ratios["player2_worst"] = report.player2_worst;
  ratios["ratio1"] = report.ratio1;
  ratios["ratio2"] = report.ratio2;
  ratios["bound1"] = BoundJson(bound1);
  ratios["bound2"] = BoundJson(bound2);
  const bool duality =
      WeakDualityHolds(report, game.max_payoff(), options.tolerance);
  ratios["weak_duality"] = duality;
  std::string status = "ok";
  try {
    RequireRatios(report, bound1, bound2, solution.x_hat, solution.y_hat);
    if (!duality) {
      throw GuaranteeViolation("weak duality fails", "");
    }
  } catch (const GuaranteeViolation& violation) {
    status = "violation";
    ratios["message"] = violation.what();
    ratios["witness"] = violation.witness();
    outcome.exit_code = kExitGuaranteeViolation;
  }
  ratios["status"] = status;
  out["ratios"] = std::move(ratios);
}

}  // namespace

SolveOutcome Solve(const Game& game, const SolveOptions& options) {
  const auto start = Clock::now();
  SolveOutcome outcome;
  Json& report = outcome.report;
  report["algorithm"] = options.algorithm;
  Json config;
  Solution solution;
  double gamma = 0.0;
  double value_lower = 0.0;
  double value_upper = 0.0;
  Json iterations;
  Json iteration_bound;
  Json v_final;

  if (options.algorithm == "mwu") {
    MwuConfig mwu;
    mwu.epsilon = options.epsilon;
    mwu.mode = ParseMode(options.mode);
    config["eps"] = options.epsilon;
    config["mode"] = options.mode;
    const MwuResult result = SolveMwu(game, mwu);
    const double bound = game.alpha() * (1.0 + options.epsilon) + 1e-6;
    solution = {result.x_hat, result.y_hat,
                mwu.mode == MwuMode::kPlayerTwo ? kUnchecked : bound,
                mwu.mode == MwuMode::kPlayerOne ? kUnchecked : bound};
    value_lower = result.lower_bound;
    value_upper = result.upper_bound_empirical;
    iterations = result.iterations;
    iteration_bound = result.iteration_bound;
  } else if (options.algorithm == "ellipsoid") {
    const double relative = options.gamma.value_or(1e-4);
    if (!(relative > 0.0) || !std::isfinite(relative)) {
      throw ConfigError("--gamma must be positive");
    }
    gamma = relative * game.max_payoff();
    config["gamma"] = relative;
    EllipsoidConfig ellipsoid;
    ellipsoid.gamma = gamma;
    const EllipsoidResult result = SolveEllipsoid(game, ellipsoid);
    solution = {result.x_hat, result.y_hat, 0.0, 0.0};
    value_lower =
        ExpectedPayoff(game, result.x_hat,
                       game.ComputeBestResponse(result.x_hat)) /
        game.alpha();
    value_upper = result.restricted_value;
    v_final = result.v_final;
    iterations = result.total_iterations;
  } else if (options.algorithm == "lp-exact") {
    const ExactGameSolution exact = ExactGameSolve(game, options.cap);
    solution = {exact.x_star, exact.y_star, 1.0 + 1e-6, 1.0 + 1e-6};
    value_lower = exact.lp.primal_value;
    value_upper = exact.lp.dual_value;
    iterations = exact.lp.pivots;
  } else {
    throw ConfigError("unknown algorithm '" + options.algorithm + "'");
  }
  config["cap"] = options.cap;
  config["verify"] = options.verify;
  config["tolerance"] = options.tolerance;
  report["config"] = std::move(config);
  report["x_hat"] = RowJson(solution.x_hat);
  report["y_hat"] = ColumnJson(solution.y_hat);
  report["value_lower"] = value_lower;
  report["value_upper"] = value_upper;
  if (!v_final.is_null()) report["v_final"] = v_final;
  report["iterations"] = iterations;
  report["iteration_bound"] = iteration_bound;
  if (options.verify) Verify(game, options, solution, gamma, outcome);
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return outcome;
}

SolveOutcome QueryOracle(const Game& game, const OracleOptions& options) {
  if (static_cast<int>(options.x.size()) != game.num_rows()) {
    throw ConfigError("--x needs " + std::to_string(game.num_rows()) +
                      " entries, got " + std::to_string(options.x.size()));
  }
  const RowStrategy x = FromDense(options.x);
  const BestResponse answer = game.BestResponseTo(x);
  SolveOutcome outcome;
  Json& report = outcome.report;
  report["response"] = answer.response.key();
  report["payoff"] = answer.payoff;
  report["alpha"] = answer.alpha;
  if (!options.brute) return outcome;

  const BestResponse exact = BruteForceBestResponse(game, x, options.cap);
  const double slack = options.tolerance * game.max_payoff();
  report["brute_response"] = exact.response.key();
  report["brute_payoff"] = exact.payoff;
  report["ratio"] = exact.payoff > 0.0 ? answer.payoff / exact.payoff : 1.0;
  bool ok = answer.payoff <= game.alpha() * exact.payoff + slack;
  if (const auto* hspe = dynamic_cast<const HspeGame*>(&game)) {
    const double captured = 1.0 - answer.payoff;
    const double optimum = 1.0 - exact.payoff;
    const double ratio = optimum > 0.0 ? captured / optimum : 1.0;
    report["capture_value"] = captured;
    report["capture_optimum"] = optimum;
    report["capture_ratio"] = ratio;
    ok = captured * (1.0 + hspe->oracle_epsilon()) >= optimum - slack;
  }
  report["status"] = ok ? "ok" : "violation";
  if (!ok) outcome.exit_code = kExitGuaranteeViolation;
  return outcome;
}

std::string StripTiming(const Json& report) {
  Json copy = report;
  copy.erase("wall_time_ms");
  return copy.dump(2);
}

double ToleranceFromEnvironment() {
  const char* raw = std::getenv("OG_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError("OG_TOLERANCE must be a positive number, got '" +
                      std::string(raw) + "'");
  }
  return value;
}

namespace {

std::vector<double> ParseVector(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size()) {
      throw ConfigError("bad number '" + token + "' in --x");
    }
    values.push_back(value);
  }
  return values;
}

void Emit(const Json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  file << text;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zero-sum search game solver"};
  app.require_subcommand(1);

  SolveOptions solve;
  std::string solve_instance;
  std::string out_path;
  CLI::App* solve_command = app.add_subcommand("solve", "Solve a game instance");
  solve_command->add_option("--algo", solve.algorithm, "Solver")
      ->check(CLI::IsMember({"mwu", "ellipsoid", "lp-exact"}));
  solve_command->add_option("--eps", solve.epsilon, "Accuracy for mwu");
  solve_command->add_option("--gamma", solve.gamma,
                            "Grid step for ellipsoid, relative to mu");
  solve_command->add_option("--mode", solve.mode, "Guarantee target for mwu")
      ->check(CLI::IsMember({"p1", "p2", "both"}));
  solve_command->add_option("--cap", solve.cap,
                            "Enumeration cap for lp-exact and --verify");
  solve_command->add_flag("--verify", solve.verify,
                          "Check guarantees against the exact solution");
  solve_command->add_option("--out", out_path, "Report path (default stdout)");
  solve_command->add_option("instance", solve_instance, "Instance file")
      ->required();

  OracleOptions oracle;
  std::string oracle_instance;
  std::string x_text;
  CLI::App* oracle_command =
      app.add_subcommand("oracle", "Query the best-response oracle");
  oracle_command->add_option("--x", x_text, "Comma separated distribution")
      ->required();
  oracle_command->add_flag("--brute", oracle.brute,
                           "Compare with the exhaustive optimum");
  oracle_command->add_option("--cap", oracle.cap, "Enumeration cap");
  oracle_command->add_option("instance", oracle_instance, "Instance file")
      ->required();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("og");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& arg : storage) argv.push_back(arg.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const double tolerance = ToleranceFromEnvironment();
    if (*solve_command) {
      solve.tolerance = tolerance;
      const auto game = BuildGame(ParseInstanceFile(solve_instance));
      const SolveOutcome outcome = Solve(*game, solve);
      Emit(outcome.report, out_path, out);
      if (outcome.exit_code == kExitGuaranteeViolation) {
        err << "guarantee violation: "
            << outcome.report["ratios"]["message"].get<std::string>() << "\n";
      }
      return outcome.exit_code;
    }
    oracle.tolerance = tolerance;
    oracle.x = ParseVector(x_text);
    const auto game = BuildGame(ParseInstanceFile(oracle_instance));
    const SolveOutcome outcome = QueryOracle(*game, oracle);
    Emit(outcome.report, "", out);
    return outcome.exit_code;
  } catch (const GuaranteeViolation& violation) {
    err << "guarantee violation: " << violation.what() << "\n";
    return kExitGuaranteeViolation;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitError;
  }
}

}  // namespace oracle_games::cli

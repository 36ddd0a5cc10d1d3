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

#ifndef ORACLE_GAMES_ERRORS_H_
#define ORACLE_GAMES_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace oracle_games {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller handed an operation something outside its contract: an index out
// of range, a response of the wrong kind, a non-permutation.
class ContractError : public Error {
 public:
  using Error::Error;
};

class InvalidDistributionError : public Error {
 public:
  using Error::Error;
};

// Bad solver or game parameters (epsilon <= 0, nonpositive weights, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A best-response oracle produced something no correct oracle could.
class OracleContractError : public Error {
 public:
  using Error::Error;
};

// The oracle returned an all-zero payoff column.
class DegenerateColumnError : public OracleContractError {
 public:
  using OracleContractError::OracleContractError;
};

// An invariant that a proof guarantees did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Floating point breakdown (ellipsoid matrix lost definiteness, simplex
// cycling guard tripped).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured cap.
class SizeError : public Error {
 public:
  SizeError(const std::string& what, std::optional<std::size_t> count)
      : Error(what), count_(count) {}
  std::optional<std::size_t> count() const { return count_; }

 private:
  std::optional<std::size_t> count_;
};

// A strategy failed its approximation guarantee. The witness names the
// offending opponent pure strategy in textual form.
class GuaranteeViolation : public Error {
 public:
  GuaranteeViolation(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace oracle_games

#endif  // ORACLE_GAMES_ERRORS_H_

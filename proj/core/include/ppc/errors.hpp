// Copyright 2026 The ppc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPC_ERRORS_HPP_
#define PPC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ppc {

// Caller broke an operation's contract: mismatched fields, wrong lengths,
// violated scheme preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request, e.g. inverting zero or interpolating
// through two points with the same abscissa.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Experiment configuration that cannot be run.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal invariant of a plan or a decoder failed.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Answers are missing or do not determine the requested function.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Download or privacy audit found a deviation from the expected structure.
class AuditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ppc

#endif  // PPC_ERRORS_HPP_

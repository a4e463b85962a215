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

#ifndef PPC_TOOLS_CLI_CONFIG_HPP_
#define PPC_TOOLS_CLI_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppc/polyspace.hpp"
#include "ppc/rate_matrix.hpp"
#include "ppc/rs_lagrange.hpp"

namespace ppc::cli {

// One experiment. Indices are 0-based here and 1-based on the command line.
struct ExperimentConfig {
  Scheme scheme = Scheme::kGeneral;
  std::size_t n = 4;
  std::size_t k = 2;
  std::size_t g = 2;
  std::size_t f = 2;
  std::string mu = "mtilde";  // "mtilde", "m" or a number
  std::optional<std::uint64_t> q;
  std::optional<std::size_t> v;  // nullopt: every candidate
  std::uint64_t seed = 0;
  std::size_t seeds = 1000;
  std::size_t max_f = 8;
  std::vector<std::string> candidates;
  std::string out;  // empty: standard output
  // Test hook: "corrupt-answer" (simulate) or "extra-query" (verify).
  std::string fault;
};

// Values given on the command line; unset fields keep the file's values.
struct ConfigOverrides {
  std::optional<std::string> config_path;
  std::optional<std::string> scheme;
  std::optional<std::size_t> n, k, g, f;
  std::optional<std::string> mu;
  std::optional<std::uint64_t> q;
  std::optional<std::string> v;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> seeds;
  std::optional<std::size_t> max_f;
  std::optional<std::string> out;
  std::optional<std::string> fault;
};

// Reads the JSON file (if any), applies overrides and checks basic ranges.
// Throws ConfigError.
ExperimentConfig load_config(const ConfigOverrides& overrides);

// Parses "x1*x2 + 2*x1^2" style polynomials over `field` in f variables.
Candidate parse_candidate(const std::string& text, const PrimeField& field,
                          std::size_t f);

// Scheme-independent validated pieces of a run. Throw ConfigError.
CodingContext make_context(const ExperimentConfig& cfg);
CandidateSet make_candidates(const ExperimentConfig& cfg,
                             const CodingContext& ctx);
std::size_t resolve_mu(const ExperimentConfig& cfg, std::uint64_t q);

}  // namespace ppc::cli

#endif  // PPC_TOOLS_CLI_CONFIG_HPP_

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

#ifndef PPC_RECOVERY_HPP_
#define PPC_RECOVERY_HPP_

#include <cstdint>
#include <vector>

#include "ppc/query_engine.hpp"
#include "ppc/rate_matrix.hpp"
#include "ppc/storage_sim.hpp"

namespace ppc {

// Table of the desired candidate on every stored row: x[t][i] is the
// candidate evaluated on (W^(1)_{t,i}, ..., W^(f)_{t,i}).
struct RecoveredFunction {
  std::vector<std::vector<FieldElement>> x;
  friend bool operator==(const RecoveredFunction&,
                         const RecoveredFunction&) = default;
};

// Throws DecodeError when answers are missing or a block cannot be decoded,
// ConsistencyError when an interpolated polynomial exceeds degree g(k-1).
RecoveredFunction decode(const QueryPlan& plan, const Answers& answers);

// Direct evaluation of a candidate on every message row.
RecoveredFunction evaluate_table(const MessageStore& store, const Candidate& c);

// One full pipeline run: random store, plan, answers, decode.
struct SimulationRun {
  QueryPlan plan;
  MessageStore store;
  Answers answers;
  RecoveredFunction recovered;
  RecoveredFunction expected;
  bool exact() const { return recovered == expected; }
};

// The store is drawn from a seed derived from `seed`, the plan from `seed`.
SimulationRun simulate(const CodingContext& ctx, const CandidateSet& cs,
                       Scheme scheme, std::size_t v, std::uint64_t seed);

// Whether simulate() recovers the desired table exactly. Decode errors count
// as failures.
bool verify_recovery(const CodingContext& ctx, const CandidateSet& cs,
                     Scheme scheme, std::size_t v, std::uint64_t seed);

}  // namespace ppc

#endif  // PPC_RECOVERY_HPP_

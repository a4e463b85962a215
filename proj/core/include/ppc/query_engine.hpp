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

// Query planning.
//
// The user wants one candidate (the "desired" index) evaluated on every
// stored row without revealing which. Queries are organised in rounds
// tau = 1..mu. A query in round tau is a signed sum of tau candidate
// evaluations on distinct rows; its type is the set of candidates it uses.
//
// Each round consists of query groups. A group belongs to one block (one row
// of the rate matrix) and is sent to the databases in that block's support.
// In round tau a group owns one fresh row for every (tau-1)-subset U of the
// non-desired candidates, and asks every tau-type S once; the term for
// candidate m in S reads the row indexed by S \ m. Rows indexed by sets that
// contain the desired candidate are borrowed, per database, from a group of
// the previous round that the database never saw (side information). The
// borrowed part of a desired sum is then a known multiple of a quantity the
// user already decoded, and the fresh desired row can be isolated.
//
// Sums of redundant types are never sent: their values follow from retained
// sums at the same database (linear dependencies among the candidates).

#ifndef PPC_QUERY_ENGINE_HPP_
#define PPC_QUERY_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppc/polyspace.hpp"
#include "ppc/rate_matrix.hpp"
#include "ppc/rs_lagrange.hpp"

namespace ppc {

// Bit m set iff candidate m (0-based) takes part.
using TypeMask = std::uint64_t;

std::vector<std::size_t> members(TypeMask type);
// All size-`size` subsets of [0, mu), ordered lexicographically by their
// ascending member lists.
std::vector<TypeMask> subsets_of_size(std::size_t mu, std::size_t size);
// "{1,3}" with 1-based members.
std::string type_name(TypeMask type);

struct SumTerm {
  std::size_t candidate;
  std::size_t row;  // physical row
  int sign;         // +1 or -1
  friend bool operator==(const SumTerm&, const SumTerm&) = default;
};

// One downloaded symbol: sum of sign * candidate(coded row) over the terms.
struct TauSum {
  TypeMask type;
  std::size_t round;
  std::vector<SumTerm> terms;  // ascending candidate
  friend bool operator==(const TauSum&, const TauSum&) = default;
};

// A sum of one group at one database. Dropped sums are planned in full (so
// their values can be reconstructed) but not sent.
struct PlannedSum {
  TauSum sum;
  bool retained;
  std::size_t query_index;  // position in the database's query list
};

// A desired type of a group: which fresh row it isolates and how the
// borrowed interference is scaled at each database.
struct DesiredEntry {
  std::size_t type_index;   // into the round's canonical type list
  std::size_t logical_row;  // recovered row before index preparation
  int desired_sign;         // sign of the desired term
  // Per position: desired_sign * answer = value + coeff * unit(alpha_j),
  // where unit is the same-named sum of the position's side group. Empty in
  // round 1.
  std::vector<int> interference_coeff;
};

struct QueryGroup {
  std::size_t round;
  std::size_t block;
  std::size_t index;                    // within the block and round
  std::vector<std::size_t> databases;   // block support, ascending
  std::vector<std::size_t> side_groups; // per position; empty in round 1
  std::vector<int> type_signs;          // per type index
  std::vector<std::vector<PlannedSum>> sums;  // [position][type index]
  std::vector<DesiredEntry> desired;
  // Fresh logical row per (round-1)-subset index; nullopt where the subset
  // contains the desired candidate.
  std::vector<std::optional<std::size_t>> fresh_rows;
};

// Signed combination expressing one dropped type through retained types of
// the same round: dropped = sum coeff * type (values at one group/database).
struct RedundancyRelation {
  std::size_t dropped;
  std::vector<std::pair<std::size_t, FieldElement>> terms;
};

// Per-database answer symbols, in query order.
using Answers = std::vector<std::vector<FieldElement>>;

// Values of every planned sum: [group][position][type index].
using SumValues = std::vector<std::vector<std::vector<FieldElement>>>;

class QueryPlan {
 public:
  // Throws UsageError when lambda is invalid for ctx, v is out of range or
  // the sub-packetization nu^mu is too large to simulate.
  static QueryPlan build(const CodingContext& ctx, const CandidateSet& cs,
                         const RateMatrix& lambda, std::size_t v,
                         std::uint64_t seed);

  static constexpr std::size_t kMaxRows = std::size_t{1} << 22;

  const CodingContext& context() const { return ctx_; }
  const CandidateSet& candidates() const { return cs_; }
  const RateMatrix& rate_matrix() const { return lambda_; }
  Scheme scheme() const { return lambda_.scheme(); }
  std::size_t desired() const { return v_; }
  std::size_t mu() const { return cs_.size(); }
  std::size_t kappa() const { return kappa_; }
  std::size_t nu() const { return lambda_.rows(); }
  std::size_t beta() const { return beta_; }
  // Message length in field symbols: k * beta.
  std::size_t message_length() const { return ctx_.k() * beta_; }

  // Logical row -> physical row.
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  const std::vector<QueryGroup>& groups() const { return groups_; }
  const std::vector<TauSum>& queries(std::size_t j) const {
    return queries_.at(j);
  }
  const std::vector<std::vector<TauSum>>& all_queries() const {
    return queries_;
  }
  // Total number of downloaded symbols.
  std::size_t download() const;

  // Canonical type list of a round (round 0 holds the empty set).
  const std::vector<TypeMask>& types(std::size_t round) const {
    return types_.at(round);
  }
  std::size_t type_index(std::size_t round, TypeMask type) const;
  bool retained(TypeMask type) const;
  const std::vector<RedundancyRelation>& relations(std::size_t round) const {
    return relations_.at(round);
  }
  // Position of database j in a group's database list.
  std::size_t position(const QueryGroup& g, std::size_t j) const;

 private:
  QueryPlan(const CodingContext& ctx, const CandidateSet& cs,
            const RateMatrix& lambda, std::size_t v);

  CodingContext ctx_;
  CandidateSet cs_;
  RateMatrix lambda_;
  std::size_t v_;
  std::size_t kappa_ = 0;
  std::size_t beta_ = 0;
  std::vector<std::size_t> permutation_;
  std::vector<std::vector<TypeMask>> types_;
  std::vector<std::unordered_map<TypeMask, std::size_t>> type_lookup_;
  std::vector<std::vector<RedundancyRelation>> relations_;
  std::vector<QueryGroup> groups_;
  std::vector<std::vector<TauSum>> queries_;
};

QueryPlan plan_general(const CodingContext& ctx, const CandidateSet& cs,
                       std::size_t v, std::uint64_t seed);
// Requires a systematic coding context.
QueryPlan plan_systematic(const CodingContext& ctx, const CandidateSet& cs,
                          std::size_t v, std::uint64_t seed);

// The uniform permutation of [0, beta) drawn first by every plan with `seed`.
std::vector<std::size_t> index_preparation(std::size_t beta,
                                           std::uint64_t seed);

// Relations for the dropped types of one round (round >= 2), indexed against
// subsets_of_size(cs.size(), round).
std::vector<RedundancyRelation> redundancy_relations(const CandidateSet& cs,
                                                     std::size_t round);

// Retained answers plus reconstructed dropped values. Throws DecodeError when
// the answer lists do not match the plan.
SumValues offline_reconstruct(const QueryPlan& plan, const Answers& answers);

// Structural checks of a plan: count law, coverage of all rows, side
// information retrievability, term bounds. Empty iff all hold.
std::vector<std::string> audit_plan(const QueryPlan& plan);

// Expected number of sums of one retained type of round tau per database.
std::uint64_t sums_per_type(std::size_t kappa, std::size_t nu, std::size_t mu,
                            std::size_t tau);

// One line per sent sum, "DB<j> R<tau> <D|U> +c:r -c:r ..." with 1-based
// database, candidate and row; " = <value>" appended when answers are given.
std::string format_trace(const QueryPlan& plan,
                         const Answers* answers = nullptr);

}  // namespace ppc

#endif  // PPC_QUERY_ENGINE_HPP_

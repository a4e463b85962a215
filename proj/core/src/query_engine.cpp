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

#include "ppc/query_engine.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <tuple>

#include "ppc/errors.hpp"
#include "ppc/linalg.hpp"
#include "ppc/random.hpp"

namespace ppc {
namespace {

constexpr TypeMask bit_of(std::size_t m) { return TypeMask{1} << m; }

bool has(TypeMask type, std::size_t m) { return (type & bit_of(m)) != 0; }

// (-1)^{#members of S below m}.
int koszul_sign(std::size_t m, TypeMask s) {
  return std::popcount(s & (bit_of(m) - 1)) % 2 == 0 ? 1 : -1;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp,
                          std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) {
      throw UsageError("sub-packetization exceeds the simulation limit of " +
                       std::to_string(limit) + " rows");
    }
    acc *= base;
  }
  return acc;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

void collect_subsets(std::size_t mu, std::size_t size, std::size_t start,
                     TypeMask cur, std::vector<TypeMask>& out) {
  if (size == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t m = start; m + size <= mu; ++m) {
    collect_subsets(mu, size - 1, m + 1, cur | bit_of(m), out);
  }
}

// Sort key of a sent sum: round, type, then the physical rows of its terms.
using QueryKey = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;

}  // namespace

std::vector<std::size_t> members(TypeMask type) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; type != 0; ++m, type >>= 1) {
    if ((type & 1) != 0) out.push_back(m);
  }
  return out;
}

std::vector<TypeMask> subsets_of_size(std::size_t mu, std::size_t size) {
  std::vector<TypeMask> out;
  if (size <= mu) collect_subsets(mu, size, 0, 0, out);
  return out;
}

std::string type_name(TypeMask type) {
  std::string out = "{";
  bool first = true;
  for (std::size_t m : members(type)) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(m + 1);
  }
  return out + "}";
}

std::uint64_t sums_per_type(std::size_t kappa, std::size_t nu, std::size_t mu,
                            std::size_t tau) {
  return ipow(kappa, mu - tau + 1) * ipow(nu - kappa, tau - 1);
}

std::vector<RedundancyRelation> redundancy_relations(const CandidateSet& cs,
                                                     std::size_t round) {
  const std::size_t mu = cs.size();
  const std::size_t head = cs.monomial_basis_size();
  const std::size_t tail = cs.redundant_tail_size();
  std::vector<RedundancyRelation> out;
  if (round < 2 || round > tail) return out;
  const FieldElement zero = cs.field().zero();
  const FieldElement one = cs.field().one();

  // Kernel vector of candidate m in the tail: e_m - sum_h d[m][h] e_h.
  std::vector<std::vector<FieldElement>> kernel(mu, std::vector<FieldElement>(mu, zero));
  for (std::size_t r = 0; r < tail; ++r) {
    const std::size_t m = head + r;
    kernel[m][m] = one;
    for (std::size_t h = 0; h < head; ++h) {
      kernel[m][h] = -cs.tail_dependencies()[r][h];
    }
  }

  const auto types = subsets_of_size(mu, round);
  const TypeMask tail_mask = ((TypeMask{1} << tail) - 1) << head;
  for (std::size_t d = 0; d < types.size(); ++d) {
    if ((types[d] & ~tail_mask) != 0) continue;
    const auto rows = members(types[d]);
    RedundancyRelation rel{d, {}};
    for (std::size_t t = 0; t < types.size(); ++t) {
      if (t == d) continue;
      const auto cols = members(types[t]);
      Matrix sub(round, std::vector<FieldElement>(round, zero));
      for (std::size_t i = 0; i < round; ++i) {
        for (std::size_t j = 0; j < round; ++j) sub[i][j] = kernel[rows[i]][cols[j]];
      }
      const FieldElement a = determinant(std::move(sub));
      if (!a.is_zero()) rel.terms.emplace_back(t, -a);
    }
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<std::size_t> index_preparation(std::size_t beta,
                                           std::uint64_t seed) {
  Rng rng(seed);
  return rng.permutation(beta);
}

QueryPlan::QueryPlan(const CodingContext& ctx, const CandidateSet& cs,
                     const RateMatrix& lambda, std::size_t v)
    : ctx_(ctx), cs_(cs), lambda_(lambda), v_(v) {}

std::size_t QueryPlan::download() const {
  std::size_t total = 0;
  for (const auto& q : queries_) total += q.size();
  return total;
}

std::size_t QueryPlan::type_index(std::size_t round, TypeMask type) const {
  const auto& lookup = type_lookup_.at(round);
  auto it = lookup.find(type);
  if (it == lookup.end()) {
    throw UsageError("type " + type_name(type) + " is not in round " +
                     std::to_string(round));
  }
  return it->second;
}

bool QueryPlan::retained(TypeMask type) const {
  const std::size_t tau = static_cast<std::size_t>(std::popcount(type));
  if (tau == 1) return std::countr_zero(type) < static_cast<int>(cs_.f());
  const std::size_t head = cs_.monomial_basis_size();
  if (mu() <= head) return true;
  const TypeMask tail_mask = ((TypeMask{1} << (mu() - head)) - 1) << head;
  return (type & ~tail_mask) != 0;
}

std::size_t QueryPlan::position(const QueryGroup& g, std::size_t j) const {
  auto it = std::lower_bound(g.databases.begin(), g.databases.end(), j);
  if (it == g.databases.end() || *it != j) {
    throw UsageError("database " + std::to_string(j + 1) +
                     " is not in the group's support");
  }
  return static_cast<std::size_t>(it - g.databases.begin());
}

QueryPlan QueryPlan::build(const CodingContext& ctx, const CandidateSet& cs,
                           const RateMatrix& lambda, std::size_t v,
                           std::uint64_t seed) {
  const auto violations = validate(lambda, ctx);
  if (!violations.empty()) {
    throw UsageError("invalid rate matrix: " + violations.front());
  }
  if (cs.field() != ctx.field()) {
    throw UsageError("candidate set and coding context use different fields");
  }
  if (cs.g() > ctx.g()) {
    throw UsageError("candidate degree bound exceeds the code's g");
  }
  const std::size_t mu = cs.size();
  if (v >= mu) {
    throw UsageError("desired index " + std::to_string(v + 1) +
                     " outside 1.." + std::to_string(mu));
  }
  if (mu >= 63) throw UsageError("at most 62 candidates are supported");

  QueryPlan plan(ctx, cs, lambda, v);
  const std::size_t n = ctx.n();
  const std::size_t nu = lambda.rows();
  const std::size_t kappa = lambda.column_weight();
  plan.kappa_ = kappa;
  plan.beta_ = checked_pow(nu, mu, kMaxRows);
  const std::size_t beta = plan.beta_;

  Rng rng(seed);
  plan.permutation_ = rng.permutation(beta);

  plan.types_.resize(mu + 1);
  plan.type_lookup_.resize(mu + 1);
  plan.relations_.resize(mu + 1);
  for (std::size_t tau = 0; tau <= mu; ++tau) {
    plan.types_[tau] = subsets_of_size(mu, tau);
    for (std::size_t t = 0; t < plan.types_[tau].size(); ++t) {
      plan.type_lookup_[tau].emplace(plan.types_[tau][t], t);
    }
    plan.relations_[tau] = redundancy_relations(cs, tau);
  }

  // Groups, fresh rows and sign draws, in (round, block, index) order.
  std::vector<std::vector<std::vector<std::size_t>>> by_block(
      mu + 1, std::vector<std::vector<std::size_t>>(nu));
  std::size_t next_row = 0;
  for (std::size_t tau = 1; tau <= mu; ++tau) {
    const std::uint64_t per_block =
        tau == 1 ? ipow(kappa, mu - 1)
                 : ipow(kappa, mu - tau) * ipow(nu - kappa, tau - 1);
    const auto& types = plan.types_[tau];
    const auto& prev = plan.types_[tau - 1];
    for (std::size_t u = 0; u < nu; ++u) {
      for (std::size_t i = 0; i < per_block; ++i) {
        QueryGroup g;
        g.round = tau;
        g.block = u;
        g.index = i;
        g.databases = lambda.support(u);
        g.fresh_rows.assign(prev.size(), std::nullopt);
        for (std::size_t s = 0; s < prev.size(); ++s) {
          if (!has(prev[s], v)) g.fresh_rows[s] = next_row++;
        }
        g.type_signs.resize(types.size());
        for (auto& p : g.type_signs) p = rng.sign();
        by_block[tau][u].push_back(plan.groups_.size());
        plan.groups_.push_back(std::move(g));
      }
    }
  }
  if (next_row != beta) {
    throw ConsistencyError("fresh rows do not partition the message rows");
  }
  // Row signs, drawn after all groups exist so the draw order is fixed.
  std::vector<std::vector<int>> row_signs(plan.groups_.size());
  for (std::size_t gi = 0; gi < plan.groups_.size(); ++gi) {
    const auto& g = plan.groups_[gi];
    row_signs[gi].assign(g.fresh_rows.size(), 1);
    for (std::size_t s = 0; s < g.fresh_rows.size(); ++s) {
      if (g.fresh_rows[s]) row_signs[gi][s] = rng.sign();
    }
  }

  // Side information: at database j, the round-tau groups of the blocks
  // covering j are paired in order with the round-(tau-1) groups of the
  // blocks missing j.
  const InterferenceMatrices im = interference(lambda);
  for (std::size_t tau = 2; tau <= mu; ++tau) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> takers;
      std::vector<std::size_t> givers;
      for (const auto& line : im.present) {
        const auto& ids = by_block[tau][line[j]];
        takers.insert(takers.end(), ids.begin(), ids.end());
      }
      for (const auto& line : im.absent) {
        const auto& ids = by_block[tau - 1][line[j]];
        givers.insert(givers.end(), ids.begin(), ids.end());
      }
      if (takers.size() != givers.size()) {
        throw ConsistencyError("side-information pairing is unbalanced");
      }
      for (std::size_t i = 0; i < takers.size(); ++i) {
        auto& g = plan.groups_[takers[i]];
        if (g.side_groups.empty()) g.side_groups.assign(g.databases.size(), 0);
        g.side_groups[plan.position(g, j)] = givers[i];
      }
    }
  }

  // Sums.
  plan.queries_.assign(n, {});
  std::vector<std::vector<std::pair<QueryKey, std::pair<std::size_t, std::size_t>>>>
      keyed(n);
  for (std::size_t gi = 0; gi < plan.groups_.size(); ++gi) {
    auto& g = plan.groups_[gi];
    const std::size_t tau = g.round;
    const auto& types = plan.types_[tau];
    g.sums.resize(g.databases.size());
    for (std::size_t pos = 0; pos < g.databases.size(); ++pos) {
      for (std::size_t t = 0; t < types.size(); ++t) {
        const TypeMask s = types[t];
        TauSum sum{s, tau, {}};
        for (std::size_t m : members(s)) {
          const TypeMask u = s & ~bit_of(m);
          std::size_t row = 0;
          int q = 1;
          if (!has(u, v)) {
            const std::size_t ui = plan.type_index(tau - 1, u);
            row = *g.fresh_rows[ui];
            q = row_signs[gi][ui];
          } else {
            const std::size_t side = g.side_groups.at(pos);
            const TypeMask w = u & ~bit_of(v);
            const std::size_t wi = plan.type_index(tau - 2, w);
            row = *plan.groups_[side].fresh_rows[wi];
            q = row_signs[side][wi] *
                (std::popcount(u >> (v + 1)) % 2 == 0 ? 1 : -1);
          }
          sum.terms.push_back(
              {m, plan.permutation_[row], koszul_sign(m, s) * g.type_signs[t] * q});
        }
        const bool keep = plan.retained(s);
        if (keep) {
          std::vector<std::size_t> rows;
          for (const auto& term : sum.terms) rows.push_back(term.row);
          keyed[g.databases[pos]].push_back(
              {QueryKey{tau, t, std::move(rows)}, {gi, t}});
        }
        g.sums[pos].push_back({std::move(sum), keep, 0});
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::sort(keyed[j].begin(), keyed[j].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < keyed[j].size(); ++i) {
      auto& g = plan.groups_[keyed[j][i].second.first];
      auto& ps = g.sums[plan.position(g, j)][keyed[j][i].second.second];
      ps.query_index = i;
      plan.queries_[j].push_back(ps.sum);
    }
  }

  // Desired entries and interference coefficients.
  for (auto& g : plan.groups_) {
    const std::size_t tau = g.round;
    const auto& types = plan.types_[tau];
    for (std::size_t t = 0; t < types.size(); ++t) {
      const TypeMask s = types[t];
      if (!has(s, v)) continue;
      const TypeMask rest = s & ~bit_of(v);
      DesiredEntry e;
      e.type_index = t;
      e.logical_row = *g.fresh_rows[plan.type_index(tau - 1, rest)];
      const auto& first_terms = g.sums[0][t].sum.terms;
      e.desired_sign = std::find_if(first_terms.begin(), first_terms.end(),
                                    [&](const SumTerm& x) {
                                      return x.candidate == v;
                                    })->sign;
      if (tau >= 2) {
        const std::size_t unit_index = plan.type_index(tau - 1, rest);
        for (std::size_t pos = 0; pos < g.databases.size(); ++pos) {
          const auto& unit =
              plan.groups_[g.side_groups[pos]].sums[0][unit_index].sum.terms;
          std::optional<int> ratio;
          std::size_t ui = 0;
          for (const auto& term : g.sums[pos][t].sum.terms) {
            if (term.candidate == v) continue;
            const int r = term.sign * unit[ui++].sign;
            if (ratio && *ratio != r) {
              throw ConsistencyError("interference sign is not uniform");
            }
            ratio = r;
          }
          e.interference_coeff.push_back(e.desired_sign * *ratio);
        }
      }
      g.desired.push_back(std::move(e));
    }
  }
  return plan;
}

QueryPlan plan_general(const CodingContext& ctx, const CandidateSet& cs,
                       std::size_t v, std::uint64_t seed) {
  return QueryPlan::build(ctx, cs, build_general(ctx), v, seed);
}

QueryPlan plan_systematic(const CodingContext& ctx, const CandidateSet& cs,
                          std::size_t v, std::uint64_t seed) {
  if (!ctx.systematic()) {
    throw UsageError("systematic plan needs a systematic coding context");
  }
  return QueryPlan::build(ctx, cs, build_systematic(ctx), v, seed);
}

SumValues offline_reconstruct(const QueryPlan& plan, const Answers& answers) {
  const CodingContext& ctx = plan.context();
  const CandidateSet& cs = plan.candidates();
  if (answers.size() != ctx.n()) {
    throw DecodeError("expected answers from " + std::to_string(ctx.n()) +
                      " databases, got " + std::to_string(answers.size()));
  }
  for (std::size_t j = 0; j < ctx.n(); ++j) {
    if (answers[j].size() != plan.queries(j).size()) {
      throw DecodeError("database " + std::to_string(j + 1) + " returned " +
                        std::to_string(answers[j].size()) + " answers, expected " +
                        std::to_string(plan.queries(j).size()));
    }
  }

  SumValues values;
  values.reserve(plan.groups().size());
  const FieldElement zero = ctx.field().zero();
  for (const auto& g : plan.groups()) {
    auto& gv = values.emplace_back();
    for (std::size_t pos = 0; pos < g.databases.size(); ++pos) {
      auto& row = gv.emplace_back(g.sums[pos].size(), zero);
      const auto& given = answers[g.databases[pos]];
      for (std::size_t t = 0; t < g.sums[pos].size(); ++t) {
        const auto& ps = g.sums[pos][t];
        if (ps.retained) row[t] = given[ps.query_index];
      }
      if (g.round == 1) {
        // Dropped 1-sums: the candidate evaluated on the projections.
        std::vector<FieldElement> point;
        for (std::size_t h = 0; h < cs.f(); ++h) {
          point.push_back(row[h] * ctx.field().from_signed(g.sums[pos][h].sum.terms[0].sign));
        }
        for (std::size_t t = cs.f(); t < g.sums[pos].size(); ++t) {
          const SumTerm& term = g.sums[pos][t].sum.terms[0];
          row[t] = cs[term.candidate].evaluate(point) *
                   ctx.field().from_signed(term.sign);
        }
        continue;
      }
      for (const auto& rel : plan.relations(g.round)) {
        FieldElement acc = zero;
        for (const auto& [t, a] : rel.terms) {
          acc += a * ctx.field().from_signed(g.type_signs[t]) * row[t];
        }
        row[rel.dropped] = acc * ctx.field().from_signed(g.type_signs[rel.dropped]);
      }
    }
  }
  return values;
}

std::vector<std::string> audit_plan(const QueryPlan& plan) {
  std::vector<std::string> out;
  const CodingContext& ctx = plan.context();
  const std::size_t mu = plan.mu();
  const std::size_t beta = plan.beta();

  for (std::size_t j = 0; j < ctx.n(); ++j) {
    std::unordered_map<TypeMask, std::uint64_t> counts;
    for (const auto& s : plan.queries(j)) {
      ++counts[s.type];
      TypeMask seen = 0;
      for (const auto& term : s.terms) {
        if (term.candidate >= mu || term.row >= beta ||
            (term.sign != 1 && term.sign != -1) || has(seen, term.candidate)) {
          out.push_back("DB" + std::to_string(j + 1) + ": malformed sum of type " +
                        type_name(s.type));
          break;
        }
        seen |= bit_of(term.candidate);
      }
      if (seen != s.type || std::popcount(s.type) != static_cast<int>(s.round)) {
        out.push_back("DB" + std::to_string(j + 1) + ": sum type mismatch");
      }
    }
    for (std::size_t tau = 1; tau <= mu; ++tau) {
      for (TypeMask s : plan.types(tau)) {
        const std::uint64_t expected =
            plan.retained(s) ? sums_per_type(plan.kappa(), plan.nu(), mu, tau) : 0;
        const std::uint64_t got = counts.count(s) != 0 ? counts[s] : 0;
        if (got != expected) {
          out.push_back("DB" + std::to_string(j + 1) + " round " +
                        std::to_string(tau) + " type " + type_name(s) + ": " +
                        std::to_string(got) + " sums, expected " +
                        std::to_string(expected));
        }
      }
    }
  }

  std::vector<int> covered(beta, 0);
  for (const auto& g : plan.groups()) {
    for (const auto& e : g.desired) {
      if (e.logical_row < beta) ++covered[e.logical_row];
    }
  }
  for (std::size_t r = 0; r < beta; ++r) {
    if (covered[r] != 1) {
      out.push_back("row " + std::to_string(r + 1) + " recovered " +
                    std::to_string(covered[r]) + " times");
      break;
    }
  }

  const RateMatrix& lambda = plan.rate_matrix();
  for (const auto& g : plan.groups()) {
    if (g.round < 2) continue;
    std::optional<std::size_t> partial_side;
    bool all_info = true;
    for (std::size_t pos = 0; pos < g.databases.size(); ++pos) {
      const std::size_t j = g.databases[pos];
      const auto& side = plan.groups()[g.side_groups.at(pos)];
      if (std::binary_search(side.databases.begin(), side.databases.end(), j)) {
        out.push_back("side group already seen by DB" + std::to_string(j + 1));
      }
      const bool decodable =
          side.databases.size() >= ctx.k_tilde() &&
          is_information_set(ctx, ctx.k_tilde(), side.databases);
      if (decodable) continue;
      all_info = false;
      if (!is_direct_read_row(lambda, ctx, side.block)) {
        out.push_back("side group of block " + std::to_string(side.block + 1) +
                      " is not retrievable");
      } else if (partial_side && *partial_side != g.side_groups[pos]) {
        out.push_back("block " + std::to_string(g.block + 1) +
                      " mixes partial side groups");
      } else {
        partial_side = g.side_groups[pos];
      }
    }
    if (!all_info && (g.databases.size() < ctx.k_tilde() ||
                      !is_information_set(ctx, ctx.k_tilde(), g.databases))) {
      out.push_back("block " + std::to_string(g.block + 1) +
                    " cannot absorb partial side information");
    }
  }
  return out;
}

std::string format_trace(const QueryPlan& plan, const Answers* answers) {
  std::ostringstream os;
  const TypeMask desired = bit_of(plan.desired());
  for (std::size_t j = 0; j < plan.context().n(); ++j) {
    const auto& qs = plan.queries(j);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const auto& s = qs[i];
      os << "DB" << (j + 1) << " R" << s.round << ' '
         << ((s.type & desired) != 0 ? 'D' : 'U');
      for (const auto& term : s.terms) {
        os << ' ' << (term.sign > 0 ? '+' : '-') << (term.candidate + 1) << ':'
           << (term.row + 1);
      }
      if (answers != nullptr) os << " = " << (*answers).at(j).at(i).value();
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace ppc

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

#include "ppc/recovery.hpp"

#include <map>
#include <optional>
#include <string>

#include "ppc/errors.hpp"

namespace ppc {
namespace {

// A previously retrieved sum, known either as a polynomial (its block
// support decodes the product code) or only at the systematic coordinates.
struct Unit {
  explicit Unit(const PrimeField& field) : poly(field) {}
  bool full = false;
  UnivariatePoly poly;
  std::vector<std::optional<FieldElement>> systematic;  // per coordinate < k
};

class Decoder {
 public:
  Decoder(const QueryPlan& plan, const Answers& answers)
      : plan_(plan),
        ctx_(plan.context()),
        values_(offline_reconstruct(plan, answers)) {}

  RecoveredFunction run() {
    const FieldElement zero = ctx_.field().zero();
    RecoveredFunction out{std::vector<std::vector<FieldElement>>(
        plan_.beta(), std::vector<FieldElement>(ctx_.k(), zero))};
    std::vector<bool> filled(plan_.beta(), false);
    for (std::size_t gi = 0; gi < plan_.groups().size(); ++gi) {
      const auto& g = plan_.groups()[gi];
      for (const auto& e : g.desired) {
        const std::size_t row = plan_.permutation()[e.logical_row];
        if (filled[row]) throw ConsistencyError("row decoded twice");
        out.x[row] = decode_entry(gi, e);
        filled[row] = true;
      }
    }
    for (std::size_t t = 0; t < filled.size(); ++t) {
      if (!filled[t]) {
        throw DecodeError("row " + std::to_string(t + 1) + " was never decoded");
      }
    }
    return out;
  }

 private:
  FieldElement signed_value(int sign, const FieldElement& x) const {
    return sign >= 0 ? x : -x;
  }

  UnivariatePoly interpolate_guarded(const std::vector<Point>& pts,
                                     const std::string& what) const {
    UnivariatePoly p = interpolate(pts);
    if (p.degree() > static_cast<int>(ctx_.max_composed_degree())) {
      throw ConsistencyError(what + " has degree " + std::to_string(p.degree()) +
                             ", above g(k-1) = " +
                             std::to_string(ctx_.max_composed_degree()));
    }
    return p;
  }

  bool decodable(const QueryGroup& g) const {
    return g.databases.size() >= ctx_.k_tilde() &&
           is_information_set(ctx_, ctx_.k_tilde(), g.databases);
  }

  const Unit& unit(std::size_t gi, std::size_t t) {
    const auto key = std::make_pair(gi, t);
    auto it = units_.find(key);
    if (it != units_.end()) return it->second;
    const auto& g = plan_.groups()[gi];
    Unit u(ctx_.field());
    u.systematic.assign(ctx_.k(), std::nullopt);
    if (decodable(g)) {
      std::vector<Point> pts;
      for (std::size_t pos = 0; pos < g.databases.size(); ++pos) {
        pts.emplace_back(ctx_.alpha()[g.databases[pos]], values_[gi][pos][t]);
      }
      u.full = true;
      u.poly = interpolate_guarded(pts, "side information of block " +
                                            std::to_string(g.block + 1));
    } else if (is_direct_read_row(plan_.rate_matrix(), ctx_, g.block)) {
      for (std::size_t pos = 0; pos < g.databases.size(); ++pos) {
        u.systematic[g.databases[pos]] = values_[gi][pos][t];
      }
    } else {
      throw DecodeError("side information of block " +
                        std::to_string(g.block + 1) + " is not retrievable");
    }
    return units_.emplace(key, std::move(u)).first->second;
  }

  std::optional<FieldElement> unit_at(const Unit& u, std::size_t j) const {
    if (u.full) return u.poly(ctx_.alpha()[j]);
    if (j < u.systematic.size()) return u.systematic[j];
    return std::nullopt;
  }

  std::vector<FieldElement> decode_entry(std::size_t gi, const DesiredEntry& e) {
    const auto& g = plan_.groups()[gi];
    const std::size_t width = g.databases.size();
    std::vector<FieldElement> b;
    for (std::size_t pos = 0; pos < width; ++pos) {
      b.push_back(signed_value(e.desired_sign, values_[gi][pos][e.type_index]));
    }

    std::vector<std::optional<FieldElement>> clean(b.begin(), b.end());
    std::optional<std::pair<std::size_t, std::size_t>> partial;
    std::optional<int> partial_coeff;
    if (g.round >= 2) {
      const TypeMask rest = plan_.types(g.round)[e.type_index] &
                            ~(TypeMask{1} << plan_.desired());
      const std::size_t ut = plan_.type_index(g.round - 1, rest);
      for (std::size_t pos = 0; pos < width; ++pos) {
        const std::size_t side = g.side_groups[pos];
        const int coeff = e.interference_coeff[pos];
        const auto val = unit_at(unit(side, ut), g.databases[pos]);
        if (val) {
          clean[pos] = b[pos] - signed_value(coeff, *val);
          continue;
        }
        clean[pos].reset();
        const auto key = std::make_pair(side, ut);
        if ((partial && *partial != key) ||
            (partial_coeff && *partial_coeff != coeff)) {
          throw DecodeError("block " + std::to_string(g.block + 1) +
                            " mixes partial side information");
        }
        partial = key;
        partial_coeff = coeff;
      }
    }

    std::vector<FieldElement> row;
    const std::string what = "desired row in block " + std::to_string(g.block + 1);
    if (!partial) {
      if (!decodable(g)) {
        if (!is_direct_read_row(plan_.rate_matrix(), ctx_, g.block)) {
          throw DecodeError(what + " is not decodable");
        }
        for (std::size_t pos = 0; pos < width; ++pos) row.push_back(*clean[pos]);
        return row;
      }
      std::vector<Point> pts;
      for (std::size_t pos = 0; pos < width; ++pos) {
        pts.emplace_back(ctx_.alpha()[g.databases[pos]], *clean[pos]);
      }
      const UnivariatePoly psi = interpolate_guarded(pts, what);
      for (const auto& gamma : ctx_.gamma()) row.push_back(psi(gamma));
      return row;
    }

    // Partial side information U is known only at the systematic
    // coordinates. Decode P = psi + c U instead: at the partial positions P
    // is the raw desired value, elsewhere it is the clean value plus c U.
    if (!ctx_.systematic() || !decodable(g)) {
      throw DecodeError(what + " cannot absorb partial side information");
    }
    const Unit& u = units_.at(*partial);
    const int c = *partial_coeff;
    std::vector<Point> pts;
    for (std::size_t pos = 0; pos < width; ++pos) {
      const std::size_t j = g.databases[pos];
      if (!clean[pos]) {
        pts.emplace_back(ctx_.alpha()[j], b[pos]);
        continue;
      }
      const auto uj = unit_at(u, j);
      if (!uj) throw DecodeError(what + ": side information missing at DB" +
                                 std::to_string(j + 1));
      pts.emplace_back(ctx_.alpha()[j], *clean[pos] + signed_value(c, *uj));
    }
    const UnivariatePoly p = interpolate_guarded(pts, what);
    for (std::size_t i = 0; i < ctx_.k(); ++i) {
      const auto ui = unit_at(u, i);
      if (!ui) throw DecodeError(what + ": side information incomplete");
      row.push_back(p(ctx_.gamma()[i]) - signed_value(c, *ui));
    }
    return row;
  }

  const QueryPlan& plan_;
  const CodingContext& ctx_;
  SumValues values_;
  std::map<std::pair<std::size_t, std::size_t>, Unit> units_;
};

std::uint64_t store_seed(std::uint64_t seed) {
  return seed ^ 0x9e3779b97f4a7c15ULL;
}

}  // namespace

RecoveredFunction decode(const QueryPlan& plan, const Answers& answers) {
  return Decoder(plan, answers).run();
}

RecoveredFunction evaluate_table(const MessageStore& store, const Candidate& c) {
  RecoveredFunction out;
  out.x.resize(store.rows());
  for (std::size_t t = 0; t < store.rows(); ++t) {
    for (std::size_t i = 0; i < store.width(); ++i) {
      out.x[t].push_back(c.evaluate(store.point(t, i)));
    }
  }
  return out;
}

SimulationRun simulate(const CodingContext& ctx, const CandidateSet& cs,
                       Scheme scheme, std::size_t v, std::uint64_t seed) {
  QueryPlan plan = scheme == Scheme::kGeneral
                       ? plan_general(ctx, cs, v, seed)
                       : plan_systematic(ctx, cs, v, seed);
  MessageStore store = MessageStore::random(ctx.field(), cs.f(), plan.beta(),
                                            ctx.k(), store_seed(seed));
  const auto nodes = encode_store(ctx, store);
  Answers answers;
  for (const auto& node : nodes) {
    answers.push_back(answer(node, cs, plan.queries(node.index())));
  }
  RecoveredFunction recovered = decode(plan, answers);
  RecoveredFunction expected = evaluate_table(store, cs[v]);
  return SimulationRun{std::move(plan), std::move(store), std::move(answers),
                       std::move(recovered), std::move(expected)};
}

bool verify_recovery(const CodingContext& ctx, const CandidateSet& cs,
                     Scheme scheme, std::size_t v, std::uint64_t seed) {
  try {
    return simulate(ctx, cs, scheme, v, seed).exact();
  } catch (const DecodeError&) {
    return false;
  } catch (const ConsistencyError&) {
    return false;
  }
}

}  // namespace ppc

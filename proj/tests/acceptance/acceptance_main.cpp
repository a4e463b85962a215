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

// Acceptance run: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and time limits are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ppc/analysis.hpp"
#include "ppc/errors.hpp"
#include "ppc/recovery.hpp"
#include "ppc/storage_sim.hpp"
#include "test_util.hpp"

namespace ppc {
namespace {

constexpr double kRateTolerance = 1e-9;
constexpr double kSignificance = 0.01;

using Streams = std::vector<std::vector<std::vector<TauSum>>>;

// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += ok ? 0 : 1;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& f : failures_) s << "; " << f;
    return s.str();
  }
  void note(const std::string& text) { notes_ += text; }
  const std::string& notes() const { return notes_; }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

RateParams params(std::size_t n, std::size_t k, std::size_t g, std::size_t f,
                  std::size_t mu) {
  return RateParams{n, k, g, f, mu, {}};
}

QueryPlan make_plan(const CodingContext& ctx, const CandidateSet& cs, Scheme s,
                    std::size_t v, std::uint64_t seed) {
  return s == Scheme::kGeneral ? plan_general(ctx, cs, v, seed)
                               : plan_systematic(ctx, cs, v, seed);
}

std::vector<std::size_t> per_round_counts(const QueryPlan& plan, std::size_t j) {
  std::vector<std::size_t> out(plan.mu(), 0);
  for (const auto& s : plan.queries(j)) ++out[s.round - 1];
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Setup {
  Scheme scheme;
  CodingContext ctx;
  CandidateSet cs;
};

Setup setup(Scheme s, std::size_t n, std::size_t k, std::size_t g, std::size_t f,
            std::size_t mu, std::optional<std::uint64_t> q = {}) {
  auto ctx = CodingContext::make(n, k, g, s == Scheme::kSystematic, q);
  auto cs = CandidateSet::canonical(f, g, mu, ctx.field());
  return {s, std::move(ctx), std::move(cs)};
}

// Full pipeline for every v and `seeds` seeds: exact recovery, download equal
// to `download`, every database receiving `rounds` sums per round.
void end_to_end(Check& c, const Setup& s, std::size_t seeds, std::uint64_t download,
                const std::vector<std::size_t>& rounds) {
  for (std::size_t v = 0; v < s.cs.size(); ++v) {
    for (std::size_t seed = 0; seed < seeds; ++seed) {
      const std::string tag = "v=" + std::to_string(v + 1) + " seed=" + std::to_string(seed);
      SimulationRun run = simulate(s.ctx, s.cs, s.scheme, v, seed);
      c.expect(run.exact(), tag + " recovery mismatch");
      c.expect(run.plan.download() == download,
               tag + " D=" + std::to_string(run.plan.download()));
      for (std::size_t j = 0; j < s.ctx.n(); ++j) {
        const auto counts = per_round_counts(run.plan, j);
        c.expect(counts == rounds, tag + " DB" + std::to_string(j + 1) + " " + join(counts));
      }
      if (seed == 0) {
        bool audited = true;
        try {
          audit_download(run.plan);
        } catch (const AuditError&) {
          audited = false;
        }
        c.expect(audited && audit_plan(run.plan).empty(), tag + " audit");
      }
    }
  }
}

Streams streams_for(const Setup& s, std::uint64_t seed) {
  Streams out;
  for (std::size_t v = 0; v < s.cs.size(); ++v) {
    out.push_back(make_plan(s.ctx, s.cs, s.scheme, v, seed).all_queries());
  }
  return out;
}

// (type, term position, row) frequencies at database 0. A nonzero
// `row_modulus` folds the rows of v = 0 into [0, row_modulus).
std::vector<std::vector<std::uint64_t>> pooled_rows(const Setup& s, std::size_t seeds,
                                                    std::size_t row_modulus) {
  const std::size_t mu = s.cs.size();
  std::map<std::tuple<TypeMask, std::size_t, std::size_t>, std::vector<std::uint64_t>> cells;
  for (std::size_t seed = 0; seed < seeds; ++seed) {
    for (std::size_t v = 0; v < mu; ++v) {
      const auto plan = make_plan(s.ctx, s.cs, s.scheme, v, 90000 + seed * mu + v);
      for (const auto& sum : plan.queries(0)) {
        for (std::size_t i = 0; i < sum.terms.size(); ++i) {
          const std::size_t row =
              v == 0 && row_modulus != 0 ? sum.terms[i].row % row_modulus : sum.terms[i].row;
          auto& cell = cells[{sum.type, i, row}];
          if (cell.empty()) cell.assign(mu, 0);
          ++cell[v];
        }
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> table;
  for (auto& [key, counts] : cells) table.push_back(counts);
  return table;
}

void rates(Check& c) {
  c.expect(rate_general(params(4, 2, 2, 2, 3)) == Rational(32, 84), "general n=4 rate");
  c.expect(rate_systematic(params(4, 2, 2, 2, 3)) == Rational(27, 60), "systematic n=4 rate");
  struct Point {
    Scheme scheme;
    bool all_monomials;
    std::size_t f;
    Rational exact;
    double value;
  };
  const Point named[] = {
      {Scheme::kGeneral, true, 2, Rational(625, 1797), 0.347801892},
      {Scheme::kGeneral, false, 3, Rational(0), 0.310065982},
      {Scheme::kSystematic, true, 2, Rational(0), 0.457142857},
      {Scheme::kSystematic, false, 2, Rational(8, 15), 0.533333333},
  };
  for (const auto& p : named) {
    const std::size_t mu = p.all_monomials ? monomial_count(p.f, 2) : nonparallel_count(p.f, 2);
    const Rational r = rate(p.scheme, params(5, 2, 2, p.f, mu));
    // Nine published digits.
    c.expect(std::fabs(to_double(r) - p.value) < 5e-10 + kRateTolerance,
             to_string(p.scheme) + " f=" + std::to_string(p.f) + " " + to_string(r));
    if (p.exact != 0) c.expect(r == p.exact, "exact " + to_string(r));
  }
  // Reference rate grid: systematic then general, nonparallel then all monomials.
  const double grid[4][8] = {
      {0.8, 0.533333333333333, 0.426666666666667, 0.40275319567355, 0.400134322434899,
       0.400003051781096, 0.400000032782557, 0.400000000168802},
      {0.8, 0.457142857142857, 0.405544554455446, 0.400268735112686, 0.400006103608759,
       0.40000006556512, 0.400000000337604, 0.400000000000841},
      {0.666666666666667, 0.416666666666667, 0.310065982040978, 0.27498016623057,
       0.267631411411356, 0.266731030586641, 0.266669123066179, 0.266666720760106},
      {0.666666666666667, 0.347801892042293, 0.280816587678577, 0.268278462002182,
       0.266773957130711, 0.266670760690996, 0.26666675682241, 0.266666667821618},
  };
  for (int curve = 0; curve < 4; ++curve) {
    const Scheme s = curve < 2 ? Scheme::kSystematic : Scheme::kGeneral;
    const bool all = curve % 2 == 1;
    for (std::size_t f = 1; f <= 8; ++f) {
      const std::size_t mu = all ? monomial_count(f, 2) : nonparallel_count(f, 2);
      const double got = to_double(rate(s, params(5, 2, 2, f, mu)));
      c.expect(std::fabs(got - grid[curve][f - 1]) < kRateTolerance,
               "grid " + std::to_string(curve) + "," + std::to_string(f));
    }
  }
}

void general_n4(Check& c) {
  end_to_end(c, setup(Scheme::kGeneral, 4, 2, 2, 2, 3, 5), 100, 336, {54, 27, 3});
}

void systematic_n4(Check& c) {
  end_to_end(c, setup(Scheme::kSystematic, 4, 2, 2, 2, 3, 5), 100, 120, {16, 12, 2});
}

void stress(Check& c) {
  for (Scheme scheme : {Scheme::kGeneral, Scheme::kSystematic}) {
    const Setup s = setup(scheme, 5, 2, 2, 2, 5);
    const BigInt closed = closed_form_download(scheme, params(5, 2, 2, 2, 5));
    for (std::size_t v = 0; v < 5; ++v) {
      SimulationRun run = simulate(s.ctx, s.cs, scheme, v, 11 + v);
      const std::string tag = to_string(scheme) + " v=" + std::to_string(v + 1);
      const std::size_t beta = scheme == Scheme::kGeneral ? 3125 : 1024;
      c.expect(run.plan.beta() == beta, tag + " beta " + std::to_string(run.plan.beta()));
      c.expect(run.exact(), tag + " recovery mismatch");
      c.expect(BigInt(run.plan.download()) == closed, tag + " D");
      if (scheme == Scheme::kGeneral) {
        for (std::size_t j = 0; j < 5; ++j) {
          c.expect(run.plan.queries(j).size() == 3594,
                   tag + " DB" + std::to_string(j + 1) + " " +
                       std::to_string(run.plan.queries(j).size()));
        }
      }
    }
  }
}

void privacy(Check& c) {
  const std::vector<Setup> configs = {
      setup(Scheme::kGeneral, 4, 2, 2, 2, 3, 5), setup(Scheme::kSystematic, 4, 2, 2, 2, 3, 5),
      setup(Scheme::kGeneral, 5, 2, 2, 2, 5), setup(Scheme::kSystematic, 5, 2, 2, 2, 5)};
  for (const auto& s : configs) {
    for (std::uint64_t seed : {1u, 2u}) {
      c.expect(structural_privacy(streams_for(s, seed), nullptr),
               "structural " + to_string(s.scheme) + " n=" + std::to_string(s.ctx.n()));
    }
  }
  const Setup& ex1 = configs[0];
  const PrivacyReport report = audit_privacy(ex1.ctx, ex1.cs, ex1.scheme, 1000, 0, kSignificance);
  c.expect(report.seeds >= 1000, "seed count");
  c.expect(report.pass(), "general n=4 audit, min p " + std::to_string(report.min_p_value));
  std::ostringstream note;
  note << "min p " << report.min_p_value;

  Streams mutant = streams_for(ex1, 3);
  mutant[0][1].push_back(TauSum{TypeMask{1}, 1, {{0, 0, 1}}});
  c.expect(!structural_privacy(mutant, nullptr), "structural mutant not detected");

  const double level = kSignificance / static_cast<double>(ex1.ctx.n());
  const double honest = homogeneity_p_value(pooled_rows(ex1, 300, 0));
  const double biased = homogeneity_p_value(pooled_rows(ex1, 300, 32));
  c.expect(honest >= level, "honest pooled table rejected");
  c.expect(biased < level, "row-biased mutant not detected");
  note << ", mutant p " << biased;
  c.note(note.str());
}

void star_products(Check& c) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
      for (std::size_t g = 1; g <= 3; ++g) {
        if (g * (k - 1) + 1 > n) continue;
        for (bool sys : {false, true}) {
          const auto ctx = CodingContext::make(n, k, g, sys);
          c.expect(star_product_span_rank(ctx, g) == std::min(g * (k - 1) + 1, n),
                   "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " g=" + std::to_string(g));
        }
      }
    }
  }
}

void combinatorics(Check& c) {
  for (std::size_t f = 1; f <= 4; ++f) {
    for (unsigned g = 1; g <= 8; ++g) {
      std::size_t all = 0;
      std::size_t primitive = 0;
      ExponentVector e(f, 0);
      while (true) {
        std::size_t i = 0;
        while (i < f && e[i] == g) e[i++] = 0;
        if (i == f) break;
        ++e[i];
        unsigned w = 0;
        unsigned d = 0;
        for (unsigned x : e) {
          w += x;
          d = std::gcd(d, x);
        }
        if (w < 1 || w > g) continue;
        ++all;
        primitive += d == 1;
      }
      const std::string tag = "f=" + std::to_string(f) + " g=" + std::to_string(g);
      c.expect(monomial_count(f, g) == all, tag + " all");
      c.expect(nonparallel_count(f, g) == primitive, tag + " nonparallel");
    }
  }
  c.expect(nonparallel_count(2, 2) == 3, "nonparallel(2,2)");
}

void composition(Check& c) {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + rng.below(3);
    const std::size_t g = 1 + rng.below(3);
    const std::size_t n = g * (k - 1) + 1 + rng.below(3);
    const std::size_t f = 1 + rng.below(3);
    const auto ctx = CodingContext::make(n, k, g, rng.below(2) == 1, 101);
    const auto phi = testing::random_candidate(ctx.field(), f, g, rng);
    std::vector<std::vector<FieldElement>> messages;
    std::vector<UnivariatePoly> rows;
    std::vector<std::vector<FieldElement>> coded;
    for (std::size_t m = 0; m < f; ++m) {
      messages.push_back(testing::random_vector(ctx.field(), k, rng));
      rows.push_back(message_poly(ctx, messages.back()));
      coded.push_back(encode_row(ctx, messages.back()));
    }
    const auto psi = compose(ctx, phi, rows);
    const std::string tag = "instance " + std::to_string(trial);
    c.expect(psi.degree() <= static_cast<int>(g * (k - 1)), tag + " degree");
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<FieldElement> column;
      for (std::size_t m = 0; m < f; ++m) column.push_back(coded[m][j]);
      c.expect(psi(ctx.alpha()[j]) == phi.evaluate(column), tag + " coded column");
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<FieldElement> point;
      for (std::size_t m = 0; m < f; ++m) point.push_back(messages[m][i]);
      c.expect(psi(ctx.gamma()[i]) == phi.evaluate(point), tag + " message symbol");
    }
  }
}

void linear_case(Check& c) {
  using boost::multiprecision::pow;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t f = 1; f <= 4; ++f) {
        BigInt den = BigInt(f) * pow(BigInt(k), static_cast<unsigned>(f));
        for (std::size_t tau = 2; tau <= f; ++tau) {
          den += BigInt(binomial(f, tau)) * pow(BigInt(k), static_cast<unsigned>(f - tau + 1)) *
                 pow(BigInt(n - k), static_cast<unsigned>(tau - 1));
        }
        const Rational expected(BigInt(k) * pow(BigInt(n), static_cast<unsigned>(f - 1)), den);
        c.expect(rate_general(params(n, k, 1, f, f)) == expected,
                 "formula n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " f=" + std::to_string(f));
      }
    }
  }
  struct Case {
    std::size_t n, k, f;
  };
  for (const Case& x : {Case{3, 1, 2}, Case{4, 2, 2}, Case{5, 3, 3}, Case{4, 3, 2}, Case{6, 2, 3}}) {
    for (Scheme scheme : {Scheme::kGeneral, Scheme::kSystematic}) {
      const Setup s = setup(scheme, x.n, x.k, 1, x.f, x.f);
      c.expect(s.ctx.k_tilde() == x.k, "decoding dimension equals k");
      for (std::size_t v = 0; v < x.f; ++v) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          c.expect(verify_recovery(s.ctx, s.cs, scheme, v, seed),
                   to_string(scheme) + " recovery n=" + std::to_string(x.n) +
                       " k=" + std::to_string(x.k) + " f=" + std::to_string(x.f));
        }
      }
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no limit
  std::function<void(Check&)> body;
};

int run_all() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form rates and reference grid", 1.0, rates},
      {2, "general n=4 end to end (3 x 100 runs)", 5.0, general_n4},
      {3, "systematic n=4 end to end (3 x 100 runs)", 5.0, systematic_n4},
      {4, "n=5 mu=5 stress, both schemes", 60.0, stress},
      {5, "privacy audit", 0.0, privacy},
      {6, "star-product span rank", 5.0, star_products},
      {7, "monomial counts against enumeration", 0.0, combinatorics},
      {8, "composition identity, 50 instances", 0.0, composition},
      {9, "linear case g=1, mu=f", 0.0, linear_case},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = cr.limit_seconds == 0.0 || seconds < cr.limit_seconds;
    const bool pass = check.ok() && in_time;
    failures += pass ? 0 : 1;
    std::printf("criterion %d %s  %s  [%s%s%s, %.2f s", cr.id, pass ? "PASS" : "FAIL", cr.title,
                check.summary().c_str(), check.notes().empty() ? "" : ", ",
                check.notes().c_str(), seconds);
    if (cr.limit_seconds > 0.0) std::printf(" / limit %.0f s", cr.limit_seconds);
    std::printf("]\n");
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAIL" : "PASS", failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace ppc

int main() { return ppc::run_all(); }

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

#include "ppc/analysis.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cstdio>
#include <sstream>

#include "ppc/errors.hpp"

namespace ppc {
namespace {

void check_params(const RateParams& p) {
  if (p.n == 0 || p.k == 0 || p.g == 0 || p.f == 0) {
    throw UsageError("n, k, g, f must all be at least 1");
  }
  if (p.g * (p.k - 1) + 1 > p.n) {
    throw UsageError("g(k-1)+1 = " + std::to_string(p.g * (p.k - 1) + 1) +
                     " exceeds n = " + std::to_string(p.n));
  }
  if (p.mu < p.f) throw UsageError("mu must be at least f");
  const std::uint64_t q = p.q.value_or(smallest_valid_modulus(p.n));
  if (BigInt(p.mu) > polynomial_count(p.f, p.g, q)) {
    throw UsageError("mu = " + std::to_string(p.mu) +
                     " exceeds the number of distinct candidate functions");
  }
}

BigInt big_pow(std::size_t base, std::size_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

RateParams params_of(const QueryPlan& plan) {
  const CodingContext& ctx = plan.context();
  return RateParams{ctx.n(), ctx.k(), ctx.g(), plan.candidates().f(), plan.mu(),
                    ctx.field().modulus()};
}

}  // namespace

std::pair<std::size_t, std::size_t> scheme_shape(Scheme scheme, std::size_t n,
                                                 std::size_t k, std::size_t g) {
  const std::size_t kt = decoding_dimension(n, k, g);
  if (scheme == Scheme::kGeneral) return {kt, n};
  return {k, k + std::min(k, n - kt)};
}

BigInt closed_form_download(Scheme scheme, const RateParams& p) {
  check_params(p);
  const auto [kappa, nu] = scheme_shape(scheme, p.n, p.k, p.g);
  const std::size_t monomials = monomial_count(p.f, p.g);
  BigInt per_db = BigInt(p.f) * big_pow(kappa, p.mu);
  for (std::size_t tau = 2; tau <= p.mu; ++tau) {
    per_db += BigInt(nonredundant_types(p.mu, tau, monomials)) *
              big_pow(kappa, p.mu - tau + 1) * big_pow(nu - kappa, tau - 1);
  }
  return BigInt(p.n) * per_db;
}

BigInt closed_form_length(Scheme scheme, const RateParams& p) {
  check_params(p);
  const auto shape = scheme_shape(scheme, p.n, p.k, p.g);
  return BigInt(p.k) * big_pow(shape.second, p.mu);
}

Rational rate(Scheme scheme, const RateParams& p) {
  return Rational(closed_form_length(scheme, p), closed_form_download(scheme, p));
}

Rational rate_general(const RateParams& p) { return rate(Scheme::kGeneral, p); }

Rational rate_systematic(const RateParams& p) {
  return rate(Scheme::kSystematic, p);
}

AsymptoticRates asymptotic_rates(std::size_t n, std::size_t k, std::size_t g) {
  const std::size_t kt = decoding_dimension(n, k, g);
  if (k == 0 || kt > n || g * (k - 1) + 1 > n) {
    throw UsageError("asymptotic rates need g(k-1)+1 <= n");
  }
  const std::size_t nu = k + std::min(k, n - kt);
  return {Rational(BigInt(k * (n - kt)), BigInt(kt * n)),
          Rational(BigInt(nu - k), BigInt(n))};
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << '/'
     << boost::multiprecision::denominator(r);
  return os.str();
}

RateReport rate_report(Scheme scheme, const RateParams& p) {
  RateReport r{scheme,
               p,
               p.q.value_or(smallest_valid_modulus(p.n)),
               rate(scheme, p),
               closed_form_download(scheme, p),
               closed_form_length(scheme, p),
               std::nullopt,
               std::nullopt,
               {}};
  return r;
}

RateReport audit_download(const QueryPlan& plan) {
  const RateParams p = params_of(plan);
  RateReport report = rate_report(plan.scheme(), p);
  const std::size_t mu = plan.mu();
  for (std::size_t j = 0; j < plan.context().n(); ++j) {
    for (const auto& s : plan.queries(j)) ++report.ledger[{j, s.round, s.type}];
    for (std::size_t tau = 1; tau <= mu; ++tau) {
      for (TypeMask t : plan.types(tau)) {
        const std::uint64_t expected =
            plan.retained(t) ? sums_per_type(plan.kappa(), plan.nu(), mu, tau) : 0;
        auto it = report.ledger.find({j, tau, t});
        const std::uint64_t got = it == report.ledger.end() ? 0 : it->second;
        if (got != expected) {
          throw AuditError("DB" + std::to_string(j + 1) + " round " +
                           std::to_string(tau) + " type " + type_name(t) +
                           ": " + std::to_string(got) + " sums, expected " +
                           std::to_string(expected));
        }
      }
    }
  }
  report.simulated_download = plan.download();
  report.simulated_rate =
      Rational(BigInt(plan.message_length()), BigInt(plan.download()));
  if (BigInt(plan.download()) != report.closed_form_download ||
      *report.simulated_rate != report.closed_form_rate) {
    throw AuditError("simulated download " + std::to_string(plan.download()) +
                     " differs from closed form " +
                     report.closed_form_download.str());
  }
  return report;
}

std::string csv_header() { return "scheme,n,k,g,f,mu,rate_exact,rate_float,D,L"; }

std::string csv_row(const RateReport& r) {
  char buf[32];
  const Rational& value = r.simulated_rate ? *r.simulated_rate : r.closed_form_rate;
  std::snprintf(buf, sizeof buf, "%.9f", to_double(value));
  std::ostringstream os;
  os << to_string(r.scheme) << ',' << r.params.n << ',' << r.params.k << ','
     << r.params.g << ',' << r.params.f << ',' << r.params.mu << ','
     << to_string(value) << ',' << buf << ','
     << (r.simulated_download ? BigInt(*r.simulated_download)
                              : r.closed_form_download)
     << ',' << r.message_length;
  return os.str();
}

std::vector<RateReport> rate_table(std::size_t n, std::size_t k, std::size_t g,
                                   std::size_t max_f) {
  std::vector<RateReport> out;
  for (Scheme scheme : {Scheme::kGeneral, Scheme::kSystematic}) {
    for (std::size_t f = 1; f <= max_f; ++f) {
      std::vector<std::size_t> mus{nonparallel_count(f, g), monomial_count(f, g)};
      std::sort(mus.begin(), mus.end());
      mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
      for (std::size_t mu : mus) {
        out.push_back(rate_report(scheme, RateParams{n, k, g, f, mu, std::nullopt}));
      }
    }
  }
  return out;
}

CountTable count_table(const std::vector<TauSum>& queries) {
  CountTable t;
  for (const auto& s : queries) ++t[{s.round, s.type}];
  return t;
}

bool structural_privacy(
    const std::vector<std::vector<std::vector<TauSum>>>& streams,
    std::vector<std::string>* findings) {
  bool pass = true;
  for (std::size_t v = 1; v < streams.size(); ++v) {
    if (streams[v].size() != streams[0].size()) {
      pass = false;
      if (findings) findings->push_back("database count differs for v=" + std::to_string(v + 1));
      continue;
    }
    for (std::size_t j = 0; j < streams[0].size(); ++j) {
      if (count_table(streams[v][j]) != count_table(streams[0][j])) {
        pass = false;
        if (findings) {
          findings->push_back("DB" + std::to_string(j + 1) +
                              ": count table for v=" + std::to_string(v + 1) +
                              " differs from v=1");
        }
      }
    }
  }
  return pass;
}

double homogeneity_p_value(
    const std::vector<std::vector<std::uint64_t>>& table) {
  if (table.size() < 2) return 1.0;
  const std::size_t groups = table.front().size();
  std::vector<double> group_total(groups, 0.0);
  double total = 0.0;
  for (const auto& counts : table) {
    if (counts.size() != groups) throw UsageError("ragged contingency table");
    for (std::size_t v = 0; v < groups; ++v) {
      group_total[v] += static_cast<double>(counts[v]);
      total += static_cast<double>(counts[v]);
    }
  }
  const auto used = static_cast<std::size_t>(
      std::count_if(group_total.begin(), group_total.end(),
                    [](double x) { return x > 0.0; }));
  if (used < 2) return 1.0;
  double stat = 0.0;
  std::size_t cells = 0;
  for (const auto& counts : table) {
    double col = 0.0;
    for (auto c : counts) col += static_cast<double>(c);
    if (col == 0.0) continue;
    ++cells;
    for (std::size_t v = 0; v < groups; ++v) {
      const double expected = group_total[v] * col / total;
      if (expected > 0.0) {
        const double d = static_cast<double>(counts[v]) - expected;
        stat += d * d / expected;
      }
    }
  }
  if (cells < 2) return 1.0;
  const boost::math::chi_squared dist(static_cast<double>((used - 1) * (cells - 1)));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

PrivacyReport audit_privacy(const CodingContext& ctx, const CandidateSet& cs,
                            Scheme scheme, std::size_t seeds,
                            std::uint64_t first_seed, double significance) {
  PrivacyReport report;
  report.seeds = seeds;
  report.significance = significance;
  const std::size_t mu = cs.size();
  auto make = [&](std::size_t v, std::uint64_t seed) {
    return scheme == Scheme::kGeneral ? plan_general(ctx, cs, v, seed)
                                      : plan_systematic(ctx, cs, v, seed);
  };

  std::vector<std::vector<std::vector<TauSum>>> streams;
  for (std::size_t v = 0; v < mu; ++v) streams.push_back(make(v, first_seed).all_queries());
  report.structural_pass = structural_privacy(streams, &report.findings);
  if (mu < 2 || seeds == 0) return report;

  // cells[j][(type, term position, row)][v]
  using Cell = std::tuple<TypeMask, std::size_t, std::size_t>;
  std::vector<std::map<Cell, std::vector<std::uint64_t>>> cells(ctx.n());
  for (std::size_t s = 0; s < seeds; ++s) {
    for (std::size_t v = 0; v < mu; ++v) {
      const QueryPlan plan = make(v, first_seed + s * mu + v);
      for (std::size_t j = 0; j < ctx.n(); ++j) {
        for (const auto& sum : plan.queries(j)) {
          for (std::size_t i = 0; i < sum.terms.size(); ++i) {
            auto& counts = cells[j][Cell{sum.type, i, sum.terms[i].row}];
            if (counts.empty()) counts.assign(mu, 0);
            ++counts[v];
          }
        }
      }
    }
  }

  const double level = significance / static_cast<double>(ctx.n());
  for (std::size_t j = 0; j < ctx.n(); ++j) {
    std::vector<std::vector<std::uint64_t>> table;
    for (const auto& [cell, counts] : cells[j]) table.push_back(counts);
    const double p = homogeneity_p_value(table);
    report.min_p_value = std::min(report.min_p_value, p);
    if (p < level) {
      report.distributional_pass = false;
      std::ostringstream os;
      os << "DB" << (j + 1) << ": homogeneity p-value " << p << " below " << level;
      report.findings.push_back(os.str());
    }
  }
  return report;
}

}  // namespace ppc

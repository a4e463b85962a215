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

// Rate formulas, download accounting and privacy audits.

#ifndef PPC_ANALYSIS_HPP_
#define PPC_ANALYSIS_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ppc/polyspace.hpp"
#include "ppc/query_engine.hpp"
#include "ppc/rate_matrix.hpp"

namespace ppc {

using Rational = boost::multiprecision::cpp_rational;

// Parameters of a rate evaluation. q only matters for the upper bound on mu
// and defaults to the smallest prime above n.
struct RateParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t g = 0;
  std::size_t f = 0;
  std::size_t mu = 0;
  std::optional<std::uint64_t> q;
};

// Block multiplicity and block count: (k~, n) or (k, k + min{k, n - k~}).
std::pair<std::size_t, std::size_t> scheme_shape(Scheme scheme, std::size_t n,
                                                 std::size_t k, std::size_t g);

// Total downloaded symbols over all databases. Throws UsageError on
// violated preconditions (g(k-1)+1 <= n, f <= mu <= mu(f,g)).
BigInt closed_form_download(Scheme scheme, const RateParams& p);
// k * nu^mu.
BigInt closed_form_length(Scheme scheme, const RateParams& p);

Rational rate_general(const RateParams& p);
Rational rate_systematic(const RateParams& p);
Rational rate(Scheme scheme, const RateParams& p);

struct AsymptoticRates {
  Rational general;
  Rational systematic;
};
// Limits of both rates as mu grows: k(n-k~)/(k~ n) and (nu-k)/n.
AsymptoticRates asymptotic_rates(std::size_t n, std::size_t k, std::size_t g);

double to_double(const Rational& r);
// "num/den" in lowest terms.
std::string to_string(const Rational& r);

// (database, round, type) -> number of sent sums.
using DownloadLedger = std::map<std::tuple<std::size_t, std::size_t, TypeMask>,
                                std::uint64_t>;

struct RateReport {
  Scheme scheme;
  RateParams params;
  std::uint64_t q;
  Rational closed_form_rate;
  BigInt closed_form_download;
  BigInt message_length;
  std::optional<std::uint64_t> simulated_download;
  std::optional<Rational> simulated_rate;
  DownloadLedger ledger;
};

// Closed-form report without a simulation.
RateReport rate_report(Scheme scheme, const RateParams& p);

// Counts every sent sum of the plan and checks each (database, round, type)
// count and the resulting rate against the closed form. Throws AuditError
// naming the first mismatch.
RateReport audit_download(const QueryPlan& plan);

std::string csv_header();  // scheme,n,k,g,f,mu,rate_exact,rate_float,D,L
std::string csv_row(const RateReport& r);

// Rows for f = 1..max_f, both schemes, mu in {nonparallel count, monomial
// count}; sorted by (scheme, f, mu) without duplicates.
std::vector<RateReport> rate_table(std::size_t n, std::size_t k, std::size_t g,
                                   std::size_t max_f);

// Count table seen by one database: (round, type) -> number of sums.
using CountTable = std::map<std::pair<std::size_t, TypeMask>, std::uint64_t>;
CountTable count_table(const std::vector<TauSum>& queries);

struct PrivacyReport {
  bool structural_pass = true;
  bool distributional_pass = true;
  std::size_t seeds = 0;
  double significance = 0.01;
  // Smallest homogeneity p-value over databases; 1 when untested.
  double min_p_value = 1.0;
  std::vector<std::string> findings;
  bool pass() const { return structural_pass && distributional_pass; }
};

// Structural check over per-v query streams: streams[v][j] is the query list
// of database j when v is desired. Differences are appended to `findings`.
bool structural_privacy(const std::vector<std::vector<std::vector<TauSum>>>& streams,
                        std::vector<std::string>* findings);

// Chi-square test of homogeneity. table[c][v] counts category c in sample
// v; empty categories and samples are ignored. Returns the p-value.
double homogeneity_p_value(const std::vector<std::vector<std::uint64_t>>& table);

// (a) count tables identical across v; (b) for every database, a chi-square
// homogeneity test over v of the (type, term position, row) frequencies
// pooled over `seeds` plans per v, at level significance / n.
PrivacyReport audit_privacy(const CodingContext& ctx, const CandidateSet& cs,
                            Scheme scheme, std::size_t seeds,
                            std::uint64_t first_seed = 0,
                            double significance = 0.01);

}  // namespace ppc

#endif  // PPC_ANALYSIS_HPP_

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

#include "ppc/polyspace.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "ppc/errors.hpp"
#include "ppc/linalg.hpp"

namespace ppc {
namespace {

void append_compositions(std::size_t f, unsigned remaining, ExponentVector& cur,
                         std::vector<ExponentVector>& out) {
  if (cur.size() + 1 == f) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.push_back(e);
    append_compositions(f, remaining - e, cur, out);
    cur.pop_back();
  }
}

unsigned exponent_gcd(const ExponentVector& e) {
  unsigned g = 0;
  for (unsigned x : e) g = std::gcd(g, x);
  return g;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

// Signed sum over squarefree products P of distinct primes with P <= g of
// (-1)^{#primes} [C(floor(g/P) + f, f) - 1].
std::int64_t inclusion_exclusion(const std::vector<std::uint64_t>& primes,
                                 std::size_t start, std::uint64_t product,
                                 int sign, std::size_t f, std::size_t g) {
  const std::uint64_t reduced = g / product;
  std::int64_t total =
      sign * static_cast<std::int64_t>(binomial(reduced + f, f) - 1);
  for (std::size_t i = start; i < primes.size(); ++i) {
    if (product * primes[i] > g) break;
    total += inclusion_exclusion(primes, i + 1, product * primes[i], -sign, f, g);
  }
  return total;
}

}  // namespace

unsigned weight(const ExponentVector& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GradedLexLess::operator()(const ExponentVector& a,
                               const ExponentVector& b) const {
  const unsigned wa = weight(a);
  const unsigned wb = weight(b);
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw UsageError("binomial coefficient overflows");
    }
  }
  return acc.convert_to<std::uint64_t>();
}

std::uint64_t monomial_count(std::size_t f, std::size_t g) {
  return binomial(g + f, g) - 1;
}

BigInt polynomial_count(std::size_t f, std::size_t g, std::uint64_t q) {
  if (q < 2) throw UsageError("polynomial_count needs q >= 2");
  const BigInt qm = boost::multiprecision::pow(BigInt(q),
                                               static_cast<unsigned>(monomial_count(f, g)));
  return (qm - 1) / (q - 1);
}

std::vector<ExponentVector> enumerate_monomials(std::size_t f, std::size_t g,
                                                bool nonparallel_only) {
  if (f == 0) throw UsageError("need at least one variable");
  std::vector<ExponentVector> out;
  ExponentVector cur;
  for (unsigned w = 1; w <= g; ++w) append_compositions(f, w, cur, out);
  if (nonparallel_only) {
    std::erase_if(out, [](const ExponentVector& e) { return exponent_gcd(e) != 1; });
  }
  return out;
}

std::uint64_t nonparallel_count(std::size_t f, std::size_t g) {
  const auto primes = primes_up_to(g);
  const std::int64_t total = inclusion_exclusion(primes, 0, 1, 1, f, g);
  return static_cast<std::uint64_t>(total);
}

std::uint64_t nonredundant_types(std::size_t mu, std::size_t tau,
                                 std::size_t monomials) {
  if (tau == 0 || tau > mu) throw UsageError("sum size tau outside 1..mu");
  const std::size_t tail = mu > monomials ? mu - monomials : 0;
  return binomial(mu, tau) - binomial(tail, tau);
}

std::uint64_t retained_types(std::size_t mu, std::size_t tau, std::size_t f,
                             std::size_t monomials) {
  if (tau == 0 || tau > mu) return 0;
  if (tau == 1) return f;
  return nonredundant_types(mu, tau, monomials);
}

Candidate::Candidate(PrimeField field, std::size_t variables, Terms terms)
    : field_(field), variables_(variables) {
  if (variables_ == 0) throw UsageError("candidate needs at least one variable");
  for (auto& [exp, coeff] : terms) {
    if (exp.size() != variables_) {
      throw UsageError("exponent vector length does not match variable count");
    }
    if (weight(exp) == 0) throw UsageError("candidates have no constant term");
    if (coeff.modulus() != field_.modulus()) {
      throw UsageError("candidate coefficient from a different field");
    }
    if (!coeff.is_zero()) terms_.insert_or_assign(exp, coeff);
  }
  if (terms_.empty()) throw UsageError("candidate is the zero polynomial");
}

Candidate Candidate::monomial(PrimeField field, ExponentVector exponents) {
  const std::size_t f = exponents.size();
  Terms t;
  t.insert_or_assign(std::move(exponents), field.one());
  return Candidate(field, f, std::move(t));
}

Candidate Candidate::projection(PrimeField field, std::size_t variables,
                                std::size_t m) {
  if (m >= variables) throw UsageError("projection index out of range");
  ExponentVector e(variables, 0);
  e[m] = 1;
  return monomial(field, std::move(e));
}

unsigned Candidate::degree() const {
  unsigned d = 0;
  for (const auto& [exp, coeff] : terms_) d = std::max(d, weight(exp));
  return d;
}

FieldElement Candidate::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != variables_) {
    throw UsageError("evaluation point has wrong dimension");
  }
  FieldElement acc = field_.zero();
  for (const auto& [exp, coeff] : terms_) {
    FieldElement term = coeff;
    for (std::size_t i = 0; i < variables_; ++i) {
      if (exp[i] != 0) term *= pow(point[i], exp[i]);
    }
    acc += term;
  }
  return acc;
}

Candidate Candidate::normalized() const {
  const FieldElement scale = inv(terms_.begin()->second);
  Terms t;
  for (const auto& [exp, coeff] : terms_) t.insert_or_assign(exp, coeff * scale);
  return Candidate(field_, variables_, std::move(t));
}

std::vector<FieldElement> Candidate::coefficients_over(
    const std::vector<ExponentVector>& basis) const {
  std::vector<FieldElement> out(basis.size(), field_.zero());
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = terms_.find(basis[i]);
    if (it != terms_.end()) {
      out[i] = it->second;
      ++found;
    }
  }
  if (found != terms_.size()) {
    throw UsageError("candidate uses a monomial outside the basis");
  }
  return out;
}

std::string Candidate::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (coeff.value() != 1) os << coeff.value() << "*";
    bool first_factor = true;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << "x" << (i + 1);
      if (exp[i] > 1) os << "^" << exp[i];
    }
  }
  return os.str();
}

FieldElement evaluate(const Candidate& c, std::span<const FieldElement> point) {
  return c.evaluate(point);
}

UnivariatePoly compose(const CodingContext& ctx, const Candidate& c,
                       std::span<const UnivariatePoly> row_polys) {
  if (row_polys.size() != c.variables()) {
    throw UsageError("compose: need one row polynomial per variable");
  }
  for (const auto& p : row_polys) {
    if (p.degree() >= static_cast<int>(ctx.k())) {
      throw UsageError("compose: row polynomial degree exceeds k-1");
    }
  }
  UnivariatePoly acc(ctx.field());
  for (const auto& [exp, coeff] : c.terms()) {
    UnivariatePoly term = UnivariatePoly::constant(coeff);
    for (std::size_t i = 0; i < exp.size(); ++i) {
      for (unsigned e = 0; e < exp[i]; ++e) term = term * row_polys[i];
    }
    acc += term;
  }
  return acc;
}

CandidateSet::CandidateSet(std::size_t f, std::size_t g, PrimeField field,
                           std::vector<Candidate> candidates)
    : f_(f),
      g_(g),
      field_(field),
      monomials_(0),
      candidates_(std::move(candidates)) {
  if (f_ == 0 || g_ == 0) throw UsageError("candidate set needs f, g >= 1");
  monomials_ = monomial_count(f_, g_);
  const std::size_t mu = candidates_.size();
  if (mu < f_) {
    throw UsageError("candidate set must contain the f projections (mu >= f)");
  }
  if (BigInt(mu) > polynomial_count(f_, g_, field_.modulus())) {
    throw UsageError("mu exceeds the number of distinct candidate functions");
  }
  for (std::size_t m = 0; m < mu; ++m) {
    const auto& c = candidates_[m];
    if (c.field() != field_ || c.variables() != f_) {
      throw UsageError("candidate " + std::to_string(m + 1) +
                       " has the wrong field or variable count");
    }
    if (c.degree() > g_) {
      throw UsageError("candidate " + std::to_string(m + 1) +
                       " exceeds degree g = " + std::to_string(g_));
    }
    if (m < f_ && c != Candidate::projection(field_, f_, m)) {
      throw UsageError("candidate " + std::to_string(m + 1) +
                       " must be the projection x" + std::to_string(m + 1));
    }
  }
  std::vector<Candidate> normal;
  for (const auto& c : candidates_) normal.push_back(c.normalized());
  for (std::size_t a = 0; a < mu; ++a) {
    for (std::size_t b = a + 1; b < mu; ++b) {
      if (normal[a] == normal[b]) {
        throw UsageError("candidates " + std::to_string(a + 1) + " and " +
                         std::to_string(b + 1) + " are scalar multiples");
      }
    }
  }
  if (mu <= monomials_) return;

  const auto basis = enumerate_monomials(f_, g_, false);
  Matrix head;
  for (std::size_t h = 0; h < monomials_; ++h) {
    head.push_back(candidates_[h].coefficients_over(basis));
  }
  if (rank(head) != monomials_) {
    throw UsageError(
        "when mu > M the first M candidates must be linearly independent");
  }
  for (std::size_t m = monomials_; m < mu; ++m) {
    auto d = solve_combination(head, candidates_[m].coefficients_over(basis));
    if (!d) throw ConsistencyError("tail candidate outside the head span");
    tail_dependencies_.push_back(std::move(*d));
  }
}

CandidateSet CandidateSet::canonical(std::size_t f, std::size_t g,
                                     std::size_t mu, PrimeField field,
                                     std::vector<Candidate> extra) {
  std::vector<Candidate> out;
  for (std::size_t m = 0; m < f; ++m) out.push_back(Candidate::projection(field, f, m));
  const auto all = enumerate_monomials(f, g, false);
  for (const auto& e : all) {
    if (out.size() >= mu) break;
    if (weight(e) > 1 && exponent_gcd(e) == 1) out.push_back(Candidate::monomial(field, e));
  }
  for (const auto& e : all) {
    if (out.size() >= mu) break;
    if (exponent_gcd(e) > 1) out.push_back(Candidate::monomial(field, e));
  }
  for (auto& c : extra) {
    if (out.size() >= mu) break;
    out.push_back(std::move(c));
  }
  if (out.size() < mu) {
    throw UsageError("canonical candidate list has only " +
                     std::to_string(out.size()) + " entries, mu = " +
                     std::to_string(mu) + "; supply extra candidates");
  }
  out.resize(mu, out.front());
  return CandidateSet(f, g, field, std::move(out));
}

std::size_t CandidateSet::redundant_tail_size() const {
  return candidates_.size() > monomials_ ? candidates_.size() - monomials_ : 0;
}

}  // namespace ppc

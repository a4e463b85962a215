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

// Candidate functions: multivariate polynomials in the f stored messages,
// the monomial counting formulas, and the composition psi_t(z) = phi(l_t(z)).

#ifndef PPC_POLYSPACE_HPP_
#define PPC_POLYSPACE_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ppc/field.hpp"
#include "ppc/poly.hpp"
#include "ppc/rs_lagrange.hpp"

namespace ppc {

using BigInt = boost::multiprecision::cpp_int;

// Exponents (i_1, ..., i_f) of a monomial W1^i_1 ... Wf^i_f.
using ExponentVector = std::vector<unsigned>;

unsigned weight(const ExponentVector& e);

// Graded lexicographic order: lower weight first, then larger leading
// exponents first (x before y, x^2 before xy before y^2).
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Exact binomial coefficient; 0 when k > n. Throws UsageError on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// M(f,g) = C(g+f, g) - 1 monomials with 1 <= wt <= g.
std::uint64_t monomial_count(std::size_t f, std::size_t g);

// mu(f,g) = (q^M - 1)/(q - 1): polynomials up to scalar multiples.
BigInt polynomial_count(std::size_t f, std::size_t g, std::uint64_t q);

// All exponent vectors with 1 <= wt <= g in graded lexicographic order. With
// `nonparallel_only`, vectors whose nonzero entries share a common factor
// (proper powers of another monomial) are dropped.
std::vector<ExponentVector> enumerate_monomials(std::size_t f, std::size_t g,
                                                bool nonparallel_only);

// Number of nonparallel monomials, by inclusion-exclusion over sets of primes
// p <= g with product <= g.
std::uint64_t nonparallel_count(std::size_t f, std::size_t g);

// rho(mu, tau) = C(mu, tau) - C(max{mu - M, 0}, tau) for 2 <= tau <= mu.
std::uint64_t nonredundant_types(std::size_t mu, std::size_t tau,
                                 std::size_t monomials);

// Retained tau-sum types per round: f for tau = 1, rho(mu, tau) otherwise.
std::uint64_t retained_types(std::size_t mu, std::size_t tau, std::size_t f,
                             std::size_t monomials);

// A polynomial without constant term: sum of a_i W^i over 1 <= wt(i).
class Candidate {
 public:
  using Terms = std::map<ExponentVector, FieldElement, GradedLexLess>;

  // Zero coefficients are dropped. Throws UsageError if nothing remains, if
  // an exponent vector has the wrong length, or a term has weight 0.
  Candidate(PrimeField field, std::size_t variables, Terms terms);

  static Candidate monomial(PrimeField field, ExponentVector exponents);
  // W^(m), 0-based m.
  static Candidate projection(PrimeField field, std::size_t variables,
                              std::size_t m);

  const PrimeField& field() const { return field_; }
  std::size_t variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  unsigned degree() const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  // Scaled so that the first term (graded lex) has coefficient 1; two
  // candidates are scalar multiples iff their normal forms agree.
  Candidate normalized() const;

  // Coefficient vector over `basis` (zero for absent monomials). Throws if
  // the candidate uses a monomial outside the basis.
  std::vector<FieldElement> coefficients_over(
      const std::vector<ExponentVector>& basis) const;

  // Human-readable form, e.g. "x1*x2 + 2*x1^2".
  std::string to_string() const;

  friend bool operator==(const Candidate&, const Candidate&) = default;

 private:
  PrimeField field_;
  std::size_t variables_;
  Terms terms_;
};

FieldElement evaluate(const Candidate& c, std::span<const FieldElement> point);

// psi(z) = phi(l_1(z), ..., l_f(z)). Each row polynomial must have degree
// <= k-1; the result has degree <= deg(phi) (k-1).
UnivariatePoly compose(const CodingContext& ctx, const Candidate& c,
                       std::span<const UnivariatePoly> row_polys);

// The mu candidate functions of one experiment. The first f are the
// coordinate projections; no two are scalar multiples of each other.
class CandidateSet {
 public:
  CandidateSet(std::size_t f, std::size_t g, PrimeField field,
               std::vector<Candidate> candidates);

  // Projections, then the other nonparallel monomials, then the remaining
  // monomials, then `extra`, truncated to mu.
  static CandidateSet canonical(std::size_t f, std::size_t g, std::size_t mu,
                                PrimeField field,
                                std::vector<Candidate> extra = {});

  std::size_t f() const { return f_; }
  std::size_t g() const { return g_; }
  std::size_t size() const { return candidates_.size(); }
  const PrimeField& field() const { return field_; }
  const Candidate& operator[](std::size_t i) const { return candidates_.at(i); }
  const std::vector<Candidate>& candidates() const { return candidates_; }

  // M(f, g).
  std::size_t monomial_basis_size() const { return monomials_; }
  // max{mu - M, 0}: candidates at indices [M, mu) are linear combinations of
  // the first M.
  std::size_t redundant_tail_size() const;
  // For tail candidate M + r, the coefficients d with
  // candidate[M + r] = sum_h d[h] candidate[h], h < M.
  const std::vector<std::vector<FieldElement>>& tail_dependencies() const {
    return tail_dependencies_;
  }

 private:
  std::size_t f_;
  std::size_t g_;
  PrimeField field_;
  std::size_t monomials_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<FieldElement>> tail_dependencies_;
};

}  // namespace ppc

#endif  // PPC_POLYSPACE_HPP_

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

// Reed-Solomon codes with Lagrange-basis encoding.
//
// A length-k message w is the list of values of the unique polynomial l(z) of
// degree < k with l(gamma_i) = w_i; its codeword is (l(alpha_1), ...,
// l(alpha_n)). Choosing gamma_i = alpha_i makes the encoding systematic.
// Coordinates and message indices are 0-based throughout the API.

#ifndef PPC_RS_LAGRANGE_HPP_
#define PPC_RS_LAGRANGE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ppc/field.hpp"
#include "ppc/linalg.hpp"
#include "ppc/poly.hpp"

namespace ppc {

// min{g(k-1)+1, n}: dimension of the g-fold star-product of RS_k.
std::size_t decoding_dimension(std::size_t n, std::size_t k, std::size_t g);

// Code parameters and evaluation points shared by every part of a scheme run.
class CodingContext {
 public:
  // Validates all invariants: q prime and > n, alpha distinct and nonzero,
  // gamma distinct, g(k-1)+1 <= n. `systematic` is derived from gamma.
  CodingContext(PrimeField field, std::size_t n, std::size_t k, std::size_t g,
                std::vector<FieldElement> alpha,
                std::vector<FieldElement> gamma);

  // Default points: alpha_j = j (1..n); gamma = alpha[0..k) when systematic,
  // otherwise gamma_i = i (0..k-1). q defaults to the smallest prime > n.
  static CodingContext make(std::size_t n, std::size_t k, std::size_t g,
                            bool systematic,
                            std::optional<std::uint64_t> q = std::nullopt);

  const PrimeField& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t g() const { return g_; }
  std::size_t k_tilde() const { return k_tilde_; }
  bool systematic() const { return systematic_; }
  const std::vector<FieldElement>& alpha() const { return alpha_; }
  const std::vector<FieldElement>& gamma() const { return gamma_; }
  // Largest degree of any composition psi_t = phi(l_t): g(k-1).
  std::size_t max_composed_degree() const { return g_ * (k_ - 1); }

 private:
  PrimeField field_;
  std::size_t n_;
  std::size_t k_;
  std::size_t g_;
  std::size_t k_tilde_;
  bool systematic_;
  std::vector<FieldElement> alpha_;
  std::vector<FieldElement> gamma_;
};

// iota_i(x) = prod_{t != i} (x - gamma_t) / (gamma_i - gamma_t).
FieldElement lagrange_basis(const CodingContext& ctx, std::size_t i,
                            const FieldElement& x);

// iota_i as a polynomial.
UnivariatePoly lagrange_basis_poly(const CodingContext& ctx, std::size_t i);

// k x n matrix (iota_i(alpha_j)).
Matrix generator_matrix(const CodingContext& ctx);

// Codeword w * G, i.e. (l(alpha_1), ..., l(alpha_n)).
std::vector<FieldElement> encode_row(const CodingContext& ctx,
                                     std::span<const FieldElement> w);

// The interpolation polynomial l(z) of a message row.
UnivariatePoly message_poly(const CodingContext& ctx,
                            std::span<const FieldElement> w);

// Componentwise product.
std::vector<FieldElement> star_product(std::span<const FieldElement> u,
                                       std::span<const FieldElement> v);

// Whether `positions` (0-based coordinates) carry a full-rank dim x |positions|
// submatrix of a generator of RS_dim(alpha). Computed by rank, not assumed.
bool is_information_set(const CodingContext& ctx, std::size_t dim,
                        std::span<const std::size_t> positions);

// Rank of the span of all g-fold star-products of the generator rows.
std::size_t star_product_span_rank(const CodingContext& ctx, std::size_t g);

}  // namespace ppc

#endif  // PPC_RS_LAGRANGE_HPP_

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

#include "ppc/rs_lagrange.hpp"

#include <algorithm>
#include <string>

#include "ppc/errors.hpp"

namespace ppc {
namespace {

bool all_distinct(const std::vector<FieldElement>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) return false;
    }
  }
  return true;
}

// Visits every nondecreasing index tuple of length `len` over [0, bound).
template <typename Fn>
void for_each_multiset(std::size_t bound, std::size_t len, Fn&& fn) {
  std::vector<std::size_t> idx(len, 0);
  if (bound == 0) return;
  while (true) {
    fn(idx);
    std::size_t pos = len;
    while (pos > 0 && idx[pos - 1] == bound - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < len; ++i) idx[i] = idx[pos - 1];
  }
}

}  // namespace

std::size_t decoding_dimension(std::size_t n, std::size_t k, std::size_t g) {
  return std::min(g * (k - 1) + 1, n);
}

CodingContext::CodingContext(PrimeField field, std::size_t n, std::size_t k,
                             std::size_t g, std::vector<FieldElement> alpha,
                             std::vector<FieldElement> gamma)
    : field_(field),
      n_(n),
      k_(k),
      g_(g),
      k_tilde_(0),
      systematic_(false),
      alpha_(std::move(alpha)),
      gamma_(std::move(gamma)) {
  if (n_ == 0 || k_ == 0 || g_ == 0) {
    throw UsageError("coding context needs n, k, g >= 1");
  }
  if (k_ > n_) throw UsageError("coding context needs k <= n");
  if (field_.modulus() <= n_) {
    throw UsageError("field size q=" + std::to_string(field_.modulus()) +
                     " must exceed n=" + std::to_string(n_));
  }
  if (g_ * (k_ - 1) + 1 > n_) {
    throw UsageError("g(k-1)+1 = " + std::to_string(g_ * (k_ - 1) + 1) +
                     " exceeds n = " + std::to_string(n_));
  }
  if (alpha_.size() != n_ || gamma_.size() != k_) {
    throw UsageError("need n evaluation points and k interpolation points");
  }
  for (const auto& a : alpha_) {
    if (a.modulus() != field_.modulus()) throw UsageError("alpha field mismatch");
    if (a.is_zero()) throw UsageError("evaluation points must be nonzero");
  }
  for (const auto& c : gamma_) {
    if (c.modulus() != field_.modulus()) throw UsageError("gamma field mismatch");
  }
  if (!all_distinct(alpha_)) throw UsageError("evaluation points not distinct");
  if (!all_distinct(gamma_)) {
    throw UsageError("interpolation points not distinct");
  }
  k_tilde_ = decoding_dimension(n_, k_, g_);
  systematic_ = std::equal(gamma_.begin(), gamma_.end(), alpha_.begin());
}

CodingContext CodingContext::make(std::size_t n, std::size_t k, std::size_t g,
                                  bool systematic,
                                  std::optional<std::uint64_t> q) {
  const PrimeField field(q.value_or(smallest_valid_modulus(n)));
  std::vector<FieldElement> alpha;
  for (std::size_t j = 1; j <= n; ++j) alpha.push_back(field.element(j));
  std::vector<FieldElement> gamma;
  for (std::size_t i = 0; i < k; ++i) {
    gamma.push_back(systematic && i < alpha.size() ? alpha[i]
                                                   : field.element(i));
  }
  return CodingContext(field, n, k, g, std::move(alpha), std::move(gamma));
}

FieldElement lagrange_basis(const CodingContext& ctx, std::size_t i,
                            const FieldElement& x) {
  const auto& gamma = ctx.gamma();
  if (i >= gamma.size()) throw UsageError("lagrange_basis: index out of range");
  FieldElement num = ctx.field().one();
  FieldElement den = ctx.field().one();
  for (std::size_t t = 0; t < gamma.size(); ++t) {
    if (t == i) continue;
    num *= x - gamma[t];
    den *= gamma[i] - gamma[t];
  }
  return num / den;
}

UnivariatePoly lagrange_basis_poly(const CodingContext& ctx, std::size_t i) {
  const auto& gamma = ctx.gamma();
  if (i >= gamma.size()) throw UsageError("lagrange_basis: index out of range");
  UnivariatePoly p = UnivariatePoly::constant(ctx.field().one());
  FieldElement den = ctx.field().one();
  for (std::size_t t = 0; t < gamma.size(); ++t) {
    if (t == i) continue;
    p = p * UnivariatePoly::linear_root(gamma[t]);
    den *= gamma[i] - gamma[t];
  }
  return p * inv(den);
}

Matrix generator_matrix(const CodingContext& ctx) {
  Matrix g(ctx.k());
  for (std::size_t i = 0; i < ctx.k(); ++i) {
    g[i].reserve(ctx.n());
    for (const auto& a : ctx.alpha()) g[i].push_back(lagrange_basis(ctx, i, a));
  }
  return g;
}

UnivariatePoly message_poly(const CodingContext& ctx,
                            std::span<const FieldElement> w) {
  if (w.size() != ctx.k()) {
    throw UsageError("message row has length " + std::to_string(w.size()) +
                     ", expected k = " + std::to_string(ctx.k()));
  }
  std::vector<Point> points;
  points.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    points.emplace_back(ctx.gamma()[i], w[i]);
  }
  return interpolate(points);
}

std::vector<FieldElement> encode_row(const CodingContext& ctx,
                                     std::span<const FieldElement> w) {
  if (w.size() != ctx.k()) {
    throw UsageError("message row has length " + std::to_string(w.size()) +
                     ", expected k = " + std::to_string(ctx.k()));
  }
  const Matrix g = generator_matrix(ctx);
  std::vector<FieldElement> c(ctx.n(), ctx.field().zero());
  for (std::size_t i = 0; i < ctx.k(); ++i) {
    for (std::size_t j = 0; j < ctx.n(); ++j) c[j] += w[i] * g[i][j];
  }
  return c;
}

std::vector<FieldElement> star_product(std::span<const FieldElement> u,
                                       std::span<const FieldElement> v) {
  if (u.size() != v.size()) {
    throw UsageError("star_product: length mismatch");
  }
  std::vector<FieldElement> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] * v[i]);
  return out;
}

bool is_information_set(const CodingContext& ctx, std::size_t dim,
                        std::span<const std::size_t> positions) {
  if (dim == 0 || dim > ctx.n()) {
    throw UsageError("information set dimension out of range");
  }
  for (std::size_t p : positions) {
    if (p >= ctx.n()) throw UsageError("position out of range");
  }
  // Vandermonde generator of RS_dim(alpha): rows z^0 .. z^{dim-1}.
  Matrix sub(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t p : positions) sub[i].push_back(pow(ctx.alpha()[p], i));
  }
  if (positions.empty()) return false;
  return rank(std::move(sub)) == dim;
}

std::size_t star_product_span_rank(const CodingContext& ctx, std::size_t g) {
  const Matrix gen = generator_matrix(ctx);
  Matrix products;
  for_each_multiset(gen.size(), g, [&](const std::vector<std::size_t>& idx) {
    std::vector<FieldElement> row = gen[idx[0]];
    for (std::size_t i = 1; i < idx.size(); ++i) row = star_product(row, gen[idx[i]]);
    products.push_back(std::move(row));
  });
  return rank(std::move(products));
}

}  // namespace ppc

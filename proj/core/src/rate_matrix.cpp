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

#include "ppc/rate_matrix.hpp"

#include <algorithm>

#include "ppc/errors.hpp"

namespace ppc {
namespace {

bool is_prefix_support(const std::vector<std::size_t>& s, std::size_t k) {
  if (s.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (s[i] != i) return false;
  }
  return true;
}

bool contains_info_set(const CodingContext& ctx,
                       const std::vector<std::size_t>& s) {
  return s.size() >= ctx.k_tilde() && is_information_set(ctx, ctx.k_tilde(), s);
}

std::string row_name(std::size_t u) { return "row " + std::to_string(u + 1); }

}  // namespace

std::string to_string(Scheme s) {
  return s == Scheme::kGeneral ? "general" : "systematic";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "general") return Scheme::kGeneral;
  if (name == "systematic") return Scheme::kSystematic;
  throw UsageError("unknown scheme '" + name + "'");
}

RateMatrix::RateMatrix(Scheme scheme,
                       std::vector<std::vector<std::uint8_t>> bits)
    : scheme_(scheme), bits_(std::move(bits)) {
  if (bits_.empty() || bits_.front().empty()) {
    throw UsageError("rate matrix must be nonempty");
  }
  for (const auto& row : bits_) {
    if (row.size() != bits_.front().size()) {
      throw UsageError("rate matrix rows have unequal lengths");
    }
    for (auto b : row) {
      if (b > 1) throw UsageError("rate matrix entries must be 0 or 1");
    }
  }
}

std::size_t RateMatrix::column_weight() const {
  std::size_t w = 0;
  for (const auto& row : bits_) w += row[0];
  return w;
}

std::vector<std::size_t> RateMatrix::support(std::size_t u) const {
  std::vector<std::size_t> s;
  const auto& row = bits_.at(u);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) s.push_back(j);
  }
  return s;
}

std::string RateMatrix::to_grid() const {
  std::string out;
  for (const auto& row : bits_) {
    for (auto b : row) out.push_back(b != 0 ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::size_t systematic_redundancy(const CodingContext& ctx) {
  return std::min(ctx.k(), ctx.n() - ctx.k_tilde());
}

std::size_t systematic_rows(const CodingContext& ctx) {
  return ctx.k() + systematic_redundancy(ctx);
}

RateMatrix build_general(const CodingContext& ctx) {
  const std::size_t n = ctx.n();
  std::vector<std::vector<std::uint8_t>> bits(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t s = 0; s < ctx.k_tilde(); ++s) bits[u][(u + s) % n] = 1;
  }
  return RateMatrix(Scheme::kGeneral, std::move(bits));
}

RateMatrix build_systematic(const CodingContext& ctx) {
  const std::size_t n = ctx.n();
  const std::size_t k = ctx.k();
  const std::size_t r = systematic_redundancy(ctx);
  std::vector<std::vector<std::uint8_t>> bits(k + r,
                                              std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = k; j < n; ++j) bits[i][j] = 1;
    for (std::size_t s = 0; s < k - r; ++s) bits[i][(i + s) % k] = 1;
  }
  for (std::size_t i = k; i < k + r; ++i) {
    for (std::size_t j = 0; j < k; ++j) bits[i][j] = 1;
  }
  return RateMatrix(Scheme::kSystematic, std::move(bits));
}

InterferenceMatrices interference(const RateMatrix& m) {
  const std::size_t w = m.column_weight();
  InterferenceMatrices im;
  im.present.assign(w, std::vector<std::size_t>(m.cols(), 0));
  im.absent.assign(m.rows() - w, std::vector<std::size_t>(m.cols(), 0));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t u = 0; u < m.rows(); ++u) {
      if (m.bit(u, j)) {
        if (a == w) throw UsageError("rate matrix columns have unequal weights");
        im.present[a++][j] = u;
      } else {
        if (b == m.rows() - w) {
          throw UsageError("rate matrix columns have unequal weights");
        }
        im.absent[b++][j] = u;
      }
    }
  }
  return im;
}

RateMatrix from_interference(Scheme scheme, const InterferenceMatrices& im) {
  const std::size_t rows = im.present.size() + im.absent.size();
  const std::size_t cols =
      im.present.empty() ? im.absent.front().size() : im.present.front().size();
  std::vector<std::vector<std::uint8_t>> bits(rows,
                                              std::vector<std::uint8_t>(cols, 0));
  for (const auto& line : im.present) {
    for (std::size_t j = 0; j < cols; ++j) bits.at(line.at(j))[j] = 1;
  }
  return RateMatrix(scheme, std::move(bits));
}

std::vector<std::string> validate(const RateMatrix& m,
                                  const CodingContext& ctx) {
  std::vector<std::string> out;
  if (m.cols() != ctx.n()) {
    out.push_back("matrix has " + std::to_string(m.cols()) +
                  " columns, expected n = " + std::to_string(ctx.n()));
    return out;
  }
  const std::size_t w = m.column_weight();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::size_t cw = 0;
    for (std::size_t u = 0; u < m.rows(); ++u) cw += m.bit(u, j) ? 1 : 0;
    if (cw != w) {
      out.push_back("column " + std::to_string(j + 1) + " has weight " +
                    std::to_string(cw) + ", expected " + std::to_string(w));
    }
  }

  if (m.scheme() == Scheme::kGeneral) {
    for (std::size_t u = 0; u < m.rows(); ++u) {
      if (m.support(u).size() != ctx.k_tilde() ||
          !contains_info_set(ctx, m.support(u))) {
        out.push_back(row_name(u) + " support is not an information set");
      }
    }
    return out;
  }

  if (!ctx.systematic()) {
    out.push_back("systematic matrix needs a systematic coding context");
  }
  std::vector<std::size_t> prefix(ctx.k());
  for (std::size_t i = 0; i < ctx.k(); ++i) prefix[i] = i;
  const bool prefix_decodable = contains_info_set(ctx, prefix);
  std::size_t prefix_rows = 0;
  for (std::size_t u = 0; u < m.rows(); ++u) {
    const auto s = m.support(u);
    if (is_prefix_support(s, ctx.k())) {
      ++prefix_rows;
    } else if (!contains_info_set(ctx, s)) {
      out.push_back(row_name(u) +
                    " neither contains an information set nor equals [k]");
    }
  }
  const std::size_t bottom = m.rows() - w;
  if (w > m.rows() || prefix_rows < bottom) {
    out.push_back("expected " + std::to_string(m.rows() > w ? bottom : 0) +
                  " rows with support [k], found " + std::to_string(prefix_rows));
  } else if (prefix_rows > bottom && !prefix_decodable) {
    out.push_back("too many rows with support [k]: found " +
                  std::to_string(prefix_rows) + ", expected " +
                  std::to_string(bottom));
  }
  return out;
}

bool is_direct_read_row(const RateMatrix& m, const CodingContext& ctx,
                        std::size_t u) {
  const auto s = m.support(u);
  return m.scheme() == Scheme::kSystematic && ctx.systematic() &&
         is_prefix_support(s, ctx.k()) && !contains_info_set(ctx, s);
}

}  // namespace ppc

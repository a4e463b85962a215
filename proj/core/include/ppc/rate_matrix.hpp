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

#ifndef PPC_RATE_MATRIX_HPP_
#define PPC_RATE_MATRIX_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ppc/rs_lagrange.hpp"

namespace ppc {

enum class Scheme { kGeneral, kSystematic };

std::string to_string(Scheme s);
// Accepts "general" or "systematic"; throws UsageError otherwise.
Scheme parse_scheme(const std::string& name);

// Binary block-assignment matrix: row u describes which databases receive
// block u. Every column should carry the same weight (the block multiplicity
// per database); validate() checks this and the row-support conditions.
class RateMatrix {
 public:
  // Throws UsageError unless `bits` is a nonempty rectangular 0/1 matrix.
  RateMatrix(Scheme scheme, std::vector<std::vector<std::uint8_t>> bits);

  Scheme scheme() const { return scheme_; }
  std::size_t rows() const { return bits_.size(); }
  std::size_t cols() const { return bits_.front().size(); }
  // Weight of the first column.
  std::size_t column_weight() const;
  bool bit(std::size_t u, std::size_t j) const { return bits_.at(u).at(j) != 0; }
  const std::vector<std::vector<std::uint8_t>>& bits() const { return bits_; }
  // Ascending 0-based column indices of row u.
  std::vector<std::size_t> support(std::size_t u) const;
  // One line per row, e.g. "1110".
  std::string to_grid() const;

  friend bool operator==(const RateMatrix&, const RateMatrix&) = default;

 private:
  Scheme scheme_;
  std::vector<std::vector<std::uint8_t>> bits_;
};

// Per database j: column j of `present` lists the rows u with bit(u, j) set,
// column j of `absent` the remaining rows, both ascending.
struct InterferenceMatrices {
  std::vector<std::vector<std::size_t>> present;  // column weight x n
  std::vector<std::vector<std::size_t>> absent;   // (rows - weight) x n
};

// min{k, n - k~}.
std::size_t systematic_redundancy(const CodingContext& ctx);
// k + min{k, n - k~}.
std::size_t systematic_rows(const CodingContext& ctx);

// Row u covers databases u, u+1, ..., u+k~-1 (mod n).
RateMatrix build_general(const CodingContext& ctx);

// The last r rows cover the k systematic databases. Each of the first k rows
// covers every parity database plus k-r systematic ones chosen cyclically.
RateMatrix build_systematic(const CodingContext& ctx);

// Throws UsageError when the columns have unequal weights.
InterferenceMatrices interference(const RateMatrix& m);

// Inverse of interference().
RateMatrix from_interference(Scheme scheme, const InterferenceMatrices& im);

// Human-readable violations; empty iff `m` satisfies the definition of its
// variant for `ctx`. Information sets are checked by rank.
std::vector<std::string> validate(const RateMatrix& m, const CodingContext& ctx);

// Whether row u is a direct-read row: support exactly the k systematic
// databases and not decodable through the product code.
bool is_direct_read_row(const RateMatrix& m, const CodingContext& ctx,
                        std::size_t u);

}  // namespace ppc

#endif  // PPC_RATE_MATRIX_HPP_

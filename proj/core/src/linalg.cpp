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

#include "ppc/linalg.hpp"

#include <utility>

#include "ppc/errors.hpp"

namespace ppc {
namespace {

// Reduces `m` to row echelon form in place; returns the pivot columns and
// toggles `odd_swaps` on every row swap when given.
std::vector<std::size_t> echelon(Matrix& m, bool* odd_swaps = nullptr) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    if (pivot != row) {
      std::swap(m[pivot], m[row]);
      if (odd_swaps) *odd_swaps = !*odd_swaps;
    }
    const FieldElement inv_pivot = inv(m[row][col]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      const FieldElement factor = m[r][col] * inv_pivot;
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return echelon(m).size(); }

FieldElement determinant(Matrix m) {
  if (m.empty()) throw UsageError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) {
      throw UsageError("determinant requires a square matrix");
    }
  }
  bool odd_swaps = false;
  const PrimeField field = m.front().front().field();
  const auto pivots = echelon(m, &odd_swaps);
  if (pivots.size() < m.size()) return field.zero();
  FieldElement det = field.one();
  for (std::size_t i = 0; i < m.size(); ++i) det *= m[i][i];
  return odd_swaps ? -det : det;
}

std::optional<std::vector<FieldElement>> solve_combination(
    const Matrix& rows, const std::vector<FieldElement>& target) {
  if (rows.empty()) {
    for (const auto& t : target) {
      if (!t.is_zero()) return std::nullopt;
    }
    return std::vector<FieldElement>{};
  }
  const std::size_t n = rows.size();
  const std::size_t dim = target.size();
  const PrimeField field = target.front().field();
  // Augmented system A c = target with A = rows^T (dim x n).
  Matrix aug(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    aug[i].reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[j].size() != dim) {
        throw UsageError("solve_combination: row length mismatch");
      }
      aug[i].push_back(rows[j][i]);
    }
    aug[i].push_back(target[i]);
  }
  const auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  // Back substitution with free variables set to zero.
  std::vector<FieldElement> c(n, field.zero());
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t col = pivots[r];
    FieldElement acc = aug[r][n];
    for (std::size_t j = col + 1; j < n; ++j) acc -= aug[r][j] * c[j];
    c[col] = acc / aug[r][col];
  }
  return c;
}

}  // namespace ppc

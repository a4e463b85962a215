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

// Dense Gaussian elimination over GF(q). Sizes here are tiny (at most a few
// dozen rows), so nothing clever.

#ifndef PPC_LINALG_HPP_
#define PPC_LINALG_HPP_

#include <optional>
#include <vector>

#include "ppc/field.hpp"

namespace ppc {

// Row-major; all rows must have equal length and share one field.
using Matrix = std::vector<std::vector<FieldElement>>;

std::size_t rank(Matrix m);

// Determinant of a square matrix.
FieldElement determinant(Matrix m);

// Coefficients c with sum_i c_i * rows[i] == target, or nullopt if target is
// outside the row span. When the rows are dependent any solution is returned.
std::optional<std::vector<FieldElement>> solve_combination(
    const Matrix& rows, const std::vector<FieldElement>& target);

}  // namespace ppc

#endif  // PPC_LINALG_HPP_

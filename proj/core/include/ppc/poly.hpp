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

#ifndef PPC_POLY_HPP_
#define PPC_POLY_HPP_

#include <span>
#include <utility>
#include <vector>

#include "ppc/field.hpp"

namespace ppc {

// Dense univariate polynomial over GF(q), lowest-degree coefficient first.
// Trailing zero coefficients are trimmed, so the zero polynomial has no
// coefficients and degree -1.
class UnivariatePoly {
 public:
  explicit UnivariatePoly(PrimeField field) : field_(field) {}
  UnivariatePoly(PrimeField field, std::vector<FieldElement> coefficients);

  static UnivariatePoly constant(const FieldElement& c);
  // The monic linear polynomial z - root.
  static UnivariatePoly linear_root(const FieldElement& root);

  const PrimeField& field() const { return field_; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  FieldElement coefficient(std::size_t i) const;
  FieldElement operator()(const FieldElement& x) const;

  UnivariatePoly& operator+=(const UnivariatePoly& other);
  UnivariatePoly& operator-=(const UnivariatePoly& other);
  UnivariatePoly& operator*=(const FieldElement& scalar);

  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) {
    return a += b;
  }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) {
    return a -= b;
  }
  friend UnivariatePoly operator*(UnivariatePoly a, const FieldElement& s) {
    return a *= s;
  }
  friend UnivariatePoly operator*(const UnivariatePoly& a,
                                  const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  void trim();

  PrimeField field_;
  std::vector<FieldElement> coeffs_;
};

using Point = std::pair<FieldElement, FieldElement>;

// Unique polynomial of degree < points.size() through all points, by the
// Lagrange formula. Throws DomainError on a repeated abscissa and UsageError
// on an empty input.
UnivariatePoly interpolate(std::span<const Point> points);

}  // namespace ppc

#endif  // PPC_POLY_HPP_

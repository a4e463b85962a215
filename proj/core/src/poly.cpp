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

#include "ppc/poly.hpp"

#include <algorithm>
#include <string>

#include "ppc/errors.hpp"

namespace ppc {

UnivariatePoly::UnivariatePoly(PrimeField field,
                               std::vector<FieldElement> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c.modulus() != field_.modulus()) {
      throw UsageError("polynomial coefficient from a different field");
    }
  }
  trim();
}

UnivariatePoly UnivariatePoly::constant(const FieldElement& c) {
  return UnivariatePoly(c.field(), {c});
}

UnivariatePoly UnivariatePoly::linear_root(const FieldElement& root) {
  return UnivariatePoly(root.field(), {-root, root.field().one()});
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement UnivariatePoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

FieldElement UnivariatePoly::operator()(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& other) {
  if (other.field_ != field_) throw UsageError("polynomial field mismatch");
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), field_.zero());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& other) {
  return *this += other * -field_.one();
}

UnivariatePoly& UnivariatePoly::operator*=(const FieldElement& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.field_ != b.field_) throw UsageError("polynomial field mismatch");
  if (a.is_zero() || b.is_zero()) return UnivariatePoly(a.field_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UnivariatePoly(a.field_, std::move(out));
}

UnivariatePoly interpolate(std::span<const Point> points) {
  if (points.empty()) throw UsageError("interpolate: no points given");
  const PrimeField field = points.front().first.field();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw DomainError("interpolate: duplicate abscissa " +
                          std::to_string(points[i].first.value()));
      }
    }
  }
  UnivariatePoly result(field);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].second.is_zero()) continue;
    UnivariatePoly basis = UnivariatePoly::constant(field.one());
    FieldElement denom = field.one();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * UnivariatePoly::linear_root(points[j].first);
      denom *= points[i].first - points[j].first;
    }
    result += basis * (points[i].second / denom);
  }
  return result;
}

}  // namespace ppc

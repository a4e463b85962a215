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

#include "ppc/field.hpp"

#include <string>

#include "ppc/errors.hpp"

namespace ppc {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

std::uint64_t smallest_valid_modulus(std::uint64_t n) {
  std::uint64_t q = n + 1;
  while (!is_prime(q)) ++q;
  return q;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q > kMaxModulus) {
    throw UsageError("field modulus " + std::to_string(q) +
                     " exceeds the supported range (< 2^32)");
  }
  if (!is_prime(q)) {
    throw UsageError("field modulus " + std::to_string(q) + " is not prime");
  }
}

FieldElement PrimeField::element(std::uint64_t value) const {
  return FieldElement(value % q_, q_);
}

FieldElement PrimeField::from_signed(std::int64_t value) const {
  const auto q = static_cast<std::int64_t>(q_);
  std::int64_t r = value % q;
  if (r < 0) r += q;
  return FieldElement(static_cast<std::uint64_t>(r), q_);
}

FieldElement PrimeField::zero() const { return FieldElement(0, q_); }

FieldElement PrimeField::one() const { return FieldElement(1 % q_, q_); }

std::vector<FieldElement> PrimeField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t v = 0; v < q_; ++v) out.push_back(FieldElement(v, q_));
  return out;
}

void FieldElement::check_same_field(const FieldElement& other) const {
  if (q_ != other.q_) {
    throw UsageError("field mismatch: GF(" + std::to_string(q_) +
                     ") vs GF(" + std::to_string(other.q_) + ")");
  }
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : q_ - value_, q_);
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  check_same_field(other);
  value_ += other.value_;
  if (value_ >= q_) value_ -= q_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  check_same_field(other);
  value_ = value_ >= other.value_ ? value_ - other.value_
                                  : value_ + q_ - other.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  check_same_field(other);
  value_ = (value_ * other.value_) % q_;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  return *this *= inv(other);
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }

FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement pow(const FieldElement& a, std::uint64_t exponent) {
  FieldElement result = a.field().one();
  FieldElement base = a;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw DomainError("inverse of zero is undefined");
  // q is prime, so a^(q-2) = a^-1.
  return pow(a, a.modulus() - 2);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value();
}

}  // namespace ppc

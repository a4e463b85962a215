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

// Exact arithmetic in prime fields GF(q).

#ifndef PPC_FIELD_HPP_
#define PPC_FIELD_HPP_

#include <cstdint>
#include <ostream>
#include <vector>

namespace ppc {

class FieldElement;

bool is_prime(std::uint64_t value);

// Smallest prime strictly greater than n, so that n distinct nonzero
// evaluation points exist.
std::uint64_t smallest_valid_modulus(std::uint64_t n);

// GF(q) for a prime q < 2^32. Cheap to copy; two PrimeField values are the
// same field iff their moduli agree.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

  explicit PrimeField(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }

  // Reduces `value` modulo q.
  FieldElement element(std::uint64_t value) const;
  FieldElement from_signed(std::int64_t value) const;
  FieldElement zero() const;
  FieldElement one() const;

  // All q elements in natural order 0, 1, ..., q-1.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t q_;
};

// A residue in [0, q). Carries its modulus so that mixing fields is caught.
class FieldElement {
 public:
  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return q_; }
  PrimeField field() const { return PrimeField(q_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) {
    return a += b;
  }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) {
    return a -= b;
  }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) {
    return a *= b;
  }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) {
    return a /= b;
  }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class PrimeField;
  FieldElement(std::uint64_t value, std::uint64_t q) : value_(value), q_(q) {}

  void check_same_field(const FieldElement& other) const;

  std::uint64_t value_;
  std::uint64_t q_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
// Throws DomainError for a == 0.
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t exponent);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

}  // namespace ppc

#endif  // PPC_FIELD_HPP_

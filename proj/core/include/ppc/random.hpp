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

#ifndef PPC_RANDOM_HPP_
#define PPC_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace ppc {

// Seeded generator whose outputs are identical across standard libraries:
// the engine is fully specified and the bounded draw below is our own, since
// std::uniform_int_distribution is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound) by rejection. bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // +1 or -1 with equal probability.
  int sign() { return (engine_() >> 63) != 0 ? -1 : 1; }

  // Uniform permutation of [0, size) by Fisher-Yates.
  std::vector<std::size_t> permutation(std::size_t size) {
    std::vector<std::size_t> p(size);
    for (std::size_t i = 0; i < size; ++i) p[i] = i;
    for (std::size_t i = size; i > 1; --i) {
      std::swap(p[i - 1], p[below(i)]);
    }
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ppc

#endif  // PPC_RANDOM_HPP_

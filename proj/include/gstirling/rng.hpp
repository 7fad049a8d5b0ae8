#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gstirling/numeric.hpp"

namespace gstirling {

// Deterministic random source. mt19937_64 output is fully specified by the
// standard; the sampling helpers avoid std::uniform_int_distribution and
// std::shuffle, whose results are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound); bound > 0. Rejection from the top of the range.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, bound); bound > 0. Assembled from 64-bit limbs.
  BigInt below_big(const BigInt& bound);

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(static_cast<std::uint64_t>(i))]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gstirling

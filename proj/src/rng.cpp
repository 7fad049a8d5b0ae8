#include "gstirling/rng.hpp"

#include <limits>
#include <stdexcept>

namespace gstirling {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Reject the uneven tail so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

BigInt Rng::below_big(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::below_big: bound must be positive");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t limbs = (bits + 63) / 64;
  const BigInt mask = (BigInt(1) << bits) - 1;
  while (true) {
    BigInt r = 0;
    for (std::size_t i = 0; i < limbs; ++i) {
      r = (r << 64) | BigInt(static_cast<unsigned long>(next()));
    }
    r &= mask;
    if (r < bound) return r;
  }
}

}  // namespace gstirling

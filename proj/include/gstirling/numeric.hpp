#pragma once

#include <gmpxx.h>

#include <string>

namespace gstirling {

using BigInt = mpz_class;
using Rational = mpq_class;
using BigFloat = mpf_class;

// Working precision for probability-space conversions. Sequence totals are
// Bell-number sized (thousands of bits at n = 400), so intermediate floats
// carry far more mantissa than a double.
inline constexpr int kFloatBits = 256;

inline BigFloat to_bigfloat(const BigInt& v) { return BigFloat(v, kFloatBits); }
inline BigFloat to_bigfloat(const Rational& v) { return BigFloat(v, kFloatBits); }

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt int_pow(const BigInt& base, unsigned exp);

// "p/q" in lowest terms; integers render as "p/1".
std::string rational_string(const Rational& q);

}  // namespace gstirling

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gstirling/numeric.hpp"

namespace gstirling {

// Dense integer polynomial; coeffs()[i] multiplies q^i. The coefficient
// vector carries no trailing zeros (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(BigInt c);
  static Polynomial monomial(BigInt c, int power);
  // q (q-1) (q-2) ... (q-k+1); k = 0 gives 1.
  static Polynomial falling_factorial(int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  BigInt eval(const BigInt& q) const;
  Rational eval(const Rational& q) const;
  Polynomial derivative() const;
  // p(q + delta) via Horner re-expansion.
  Polynomial shifted_arg(const BigInt& delta) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator*(const BigInt& s, const Polynomial& p);

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  // Human-readable, e.g. "q^3 - 3*q^2 + 2*q".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
BigInt content(const Polynomial& p);
// p with its content divided out; leading sign preserved.
Polynomial primitive_part(const Polynomial& p);
// Quotient p / d when the division is exact over the integers; throws
// InternalInconsistency otherwise.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

}  // namespace gstirling

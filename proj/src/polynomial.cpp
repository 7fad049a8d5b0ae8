#include "gstirling/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gstirling/errors.hpp"

namespace gstirling {

namespace {
const BigInt kZero = 0;
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(BigInt c) {
  std::vector<BigInt> v;
  if (c != 0) v.push_back(std::move(c));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monomial(BigInt c, int power) {
  if (c == 0) return {};
  std::vector<BigInt> v(power + 1, BigInt(0));
  v[power] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::falling_factorial(int k) {
  Polynomial p = constant(1);
  for (int i = 0; i < k; ++i) {
    p *= Polynomial({BigInt(-i), BigInt(1)});  // (q - i)
  }
  return p;
}

BigInt Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const BigInt& Polynomial::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

BigInt Polynomial::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Rational Polynomial::eval(const Rational& q) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Rational(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = BigInt(static_cast<long>(i)) * c_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted_arg(const BigInt& delta) const {
  // Horner in (q + delta): acc = acc * (q + delta) + c_i.
  Polynomial acc;
  const Polynomial var({delta, BigInt(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * var + constant(*it);
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<BigInt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = *this + o; }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = *this - o; }
Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const BigInt& s, const Polynomial& p) {
  if (s == 0) return {};
  std::vector<BigInt> v(p.c_.size());
  for (std::size_t i = 0; i < p.c_.size(); ++i) v[i] = s * p.c_[i];
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const bool unit = (a == 1 && i > 0);
    if (!unit) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

BigInt content(const Polynomial& p) {
  BigInt g = 0;
  for (const BigInt& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  const BigInt g = content(p);
  std::vector<BigInt> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  }
  return Polynomial(std::move(v));
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw InternalInconsistency("exact_divide: zero divisor");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) {
    throw InternalInconsistency("exact_divide: division not exact");
  }
  // Long division over the rationals, then an integrality check.
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> quot(p.degree() - d.degree() + 1, Rational(0));
  const Rational lead(d.leading());
  for (int i = p.degree(); i >= d.degree(); --i) {
    Rational q = rem[i] / lead;
    quot[i - d.degree()] = q;
    if (q == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) {
      rem[i - d.degree() + j] -= q * Rational(d.coeff(j));
    }
  }
  for (const Rational& r : rem) {
    if (r != 0) throw InternalInconsistency("exact_divide: nonzero remainder");
  }
  std::vector<BigInt> out(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    Rational q = quot[i];
    q.canonicalize();
    if (q.get_den() != 1) throw InternalInconsistency("exact_divide: non-integer quotient");
    out[i] = q.get_num();
  }
  return Polynomial(std::move(out));
}

}  // namespace gstirling

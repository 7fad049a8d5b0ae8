#include <doctest.h>

#include "gstirling/errors.hpp"
#include "gstirling/polynomial.hpp"

using namespace gstirling;

TEST_CASE("arithmetic and normalization") {
  const Polynomial q({BigInt(0), BigInt(1)});
  const Polynomial p = q * q - q;  // q^2 - q
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 0);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(2) == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(Polynomial({BigInt(1), BigInt(0), BigInt(0)}).degree() == 0);
}

TEST_CASE("evaluation and argument shift") {
  // p = q^3 - 2q + 5
  const Polynomial p({BigInt(5), BigInt(-2), BigInt(0), BigInt(1)});
  CHECK(p.eval(BigInt(0)) == 5);
  CHECK(p.eval(BigInt(2)) == 9);
  CHECK(p.eval(BigInt(-3)) == -16);

  const Polynomial shifted = p.shifted_arg(-1);  // p(q - 1)
  for (long v = -4; v <= 4; ++v) {
    CHECK(shifted.eval(BigInt(v)) == p.eval(BigInt(v - 1)));
  }
}

TEST_CASE("falling factorials expand correctly") {
  CHECK(Polynomial::falling_factorial(0) == Polynomial::constant(1));
  CHECK(Polynomial::falling_factorial(1) == Polynomial({BigInt(0), BigInt(1)}));
  // q(q-1)(q-2) = q^3 - 3q^2 + 2q
  CHECK(Polynomial::falling_factorial(3) ==
        Polynomial({BigInt(0), BigInt(2), BigInt(-3), BigInt(1)}));
}

TEST_CASE("derivative, content, exact division") {
  const Polynomial p({BigInt(4), BigInt(0), BigInt(6)});  // 6q^2 + 4
  CHECK(p.derivative() == Polynomial({BigInt(0), BigInt(12)}));
  CHECK(content(p) == 2);
  CHECK(primitive_part(p) == Polynomial({BigInt(2), BigInt(0), BigInt(3)}));

  const Polynomial a({BigInt(-1), BigInt(0), BigInt(1)});  // (q-1)(q+1)
  const Polynomial b({BigInt(1), BigInt(1)});
  CHECK(exact_divide(a, b) == Polynomial({BigInt(-1), BigInt(1)}));
  CHECK_THROWS_AS(exact_divide(a, Polynomial({BigInt(2), BigInt(1)})), InternalInconsistency);
}

TEST_CASE("to_string renders signs and powers") {
  CHECK(Polynomial({BigInt(0), BigInt(2), BigInt(-3), BigInt(1)}).to_string() ==
        "q^3 - 3*q^2 + 2*q");
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial::constant(-7).to_string() == "-7");
}

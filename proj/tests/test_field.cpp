#include <doctest.h>

#include <cmath>
#include <complex>

#include "weilrep/field.hpp"

using namespace weilrep;

TEST_CASE("field arithmetic examples") {
  const PrimeField f3(3), f5(5);
  CHECK(f3.inv(2) == 2);
  CHECK(f5.inv(3) == 2);
  CHECK(f3.neg(1) == 2);
  CHECK((FieldElement(f3, 2).inv()).value() == 2);
  CHECK((FieldElement(f5, 3).inv()).value() == 2);
  CHECK((-FieldElement(f3, 1)).value() == 2);
  CHECK((FieldElement(f5, 4) / FieldElement(f5, 2)).value() == 2);
  CHECK((FieldElement(f5, 4) - FieldElement(f5, 3)).value() == 1);
}

TEST_CASE("half is the inverse of two") {
  CHECK(PrimeField(3).half() == 2);
  CHECK(PrimeField(5).half() == 3);
  CHECK(PrimeField(7).half() == 4);
  for (int p : {3, 5, 7, 11, 13}) {
    const PrimeField f(p);
    CHECK(f.mul(f.half(), 2) == 1);
  }
}

TEST_CASE("division by zero is an error") {
  const PrimeField f(7);
  CHECK_THROWS_AS(f.inv(0), DivisionByZero);
  CHECK_THROWS_AS(FieldElement(f, 0).inv(), DivisionByZero);
  CHECK_THROWS_AS(FieldElement(f, 3) / FieldElement(f, 7), DivisionByZero);
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(PrimeField(2), ValidationError);
  CHECK_THROWS_AS(PrimeField(9), ValidationError);
  CHECK_THROWS_AS(PrimeField(1), ValidationError);
  CHECK_THROWS_AS(PrimeField(17), ValidationError);
  CHECK_NOTHROW(PrimeField(17, 17));
  CHECK_THROWS_AS(FieldElement(PrimeField(3), 1) + FieldElement(PrimeField(5), 1), ValidationError);
}

TEST_CASE("character values") {
  const PrimeField f3(3), f5(5);
  CHECK(f3.character(0) == std::complex<double>(1.0, 0.0));
  const auto w = f3.character(1);
  CHECK(std::abs(w - std::polar(1.0, 2.0 * M_PI / 3.0)) < 1e-15);
  CHECK(std::abs(f5.character(2) - std::polar(1.0, 4.0 * M_PI / 5.0)) < 1e-15);
  CHECK(std::abs(FieldElement(f5, 2).character() - f5.character(2)) < 1e-15);
}

TEST_CASE("character is additive and inverses are exact") {
  for (int p : {3, 5, 7, 11, 13}) {
    const PrimeField f(p);
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b)
        CHECK(std::abs(f.character(f.add(a, b)) - f.character(a) * f.character(b)) < 1e-14);
      if (a != 0) {
        CHECK(f.mul(f.inv(a), a) == 1);
        const FieldElement e(f, a);
        CHECK((e.inv() * e).value() == 1);
      }
    }
  }
}

TEST_CASE("legendre symbol") {
  const PrimeField f(7);
  CHECK(f.legendre(0) == 0);
  CHECK(f.legendre(1) == 1);
  CHECK(f.legendre(2) == 1);
  CHECK(f.legendre(3) == -1);
}

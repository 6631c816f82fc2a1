#include "dissection/polynomial.hpp"

#include "doctest.h"

using namespace dissection;

TEST_CASE("polynomial arithmetic is exact") {
  Poly p = Poly(1) + Poly::x();                    // 1 + x
  Poly q = Poly::term(Rational("-2"), 0) + Poly::x_power(2);
  CHECK((p * q).coeffs() ==
        std::vector<Rational>{-2, -2, 1, 1});      // -2 - 2x + x^2 + x^3
  CHECK((p - p).is_zero());
  CHECK(Poly(0).is_zero());
  CHECK((Poly::x() * Poly(0)).is_zero());
  CHECK(p.eval(Rational("3/2")) == Rational("5/2"));
  CHECK(Poly::term(Rational("1/3"), 3).eval(3) == 9);
  CHECK(p * Poly(1) == p);

  // no trailing zeros after cancellation
  Poly r = Poly::x_power(2) + Poly(1);
  r -= Poly::x_power(2);
  CHECK(r.degree() == 0);
}

TEST_CASE("polynomial rendering") {
  CHECK(Poly(0).str() == "0");
  CHECK((Poly(1) + Poly::x()).str() == "1 + x");
  CHECK((Poly(-3) + Poly::term(-2, 1)).str() == "-3 - 2*x");
  CHECK(Poly::term(Rational("5/3"), 2).str() == "(5/3)*x^2");
  CHECK(Poly::term(1, 1).str() == "x");
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK_THROWS_AS(parse_rational("seven"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

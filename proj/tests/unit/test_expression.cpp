#include <doctest.h>

#include <cmath>

#include "eqarea/errors.hpp"
#include "eqarea/expression.hpp"

using eqarea::Expression;

TEST_CASE("expression arithmetic and precedence") {
  CHECK(Expression::parse("1 + 2 * 3", "u")(0.0) == 7.0);
  CHECK(Expression::parse("(1 + 2) * 3", "u")(0.0) == 9.0);
  CHECK(Expression::parse("2 ^ 3 ^ 2", "u")(0.0) == 512.0);
  CHECK(Expression::parse("2 ** 3", "u")(0.0) == 8.0);
  CHECK(Expression::parse("-u^2", "u")(3.0) == -9.0);
  CHECK(Expression::parse("u*(1-u)", "u")(0.25) == doctest::Approx(0.1875));
  CHECK(Expression::parse("8 / 2 / 2", "u")(0.0) == 2.0);
  CHECK(Expression::parse("1e-3 * u", "u")(2.0) == doctest::Approx(2e-3));
}

TEST_CASE("expression functions and constants") {
  const auto e = Expression::parse("exp(-x^2) + abs(x) + sqrt(4) + log(1) + sin(pi/2)", "x");
  CHECK(e(1.0) == doctest::Approx(std::exp(-1.0) + 1.0 + 2.0 + 0.0 + 1.0));
  CHECK(Expression::parse("tanh(x) + cos(x)", "x")(0.0) == doctest::Approx(1.0));
}

TEST_CASE("expression errors carry a column") {
  CHECK_THROWS_AS(Expression::parse("1 +", "u"), eqarea::ConfigError);
  CHECK_THROWS_AS(Expression::parse("foo(u)", "u"), eqarea::ConfigError);
  CHECK_THROWS_AS(Expression::parse("x", "u"), eqarea::ConfigError);
  CHECK_THROWS_AS(Expression::parse("(u", "u"), eqarea::ConfigError);
  CHECK_THROWS_AS(Expression::parse("u u", "u"), eqarea::ConfigError);
  try {
    (void)Expression::parse("u + $", "u");
    FAIL("expected a parse error");
  } catch (const eqarea::ConfigError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

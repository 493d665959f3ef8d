#include <doctest.h>

#include "cadorder/errors.hpp"
#include "cadorder/polynomial.hpp"
#include "test_util.hpp"

using namespace cadorder;
using testutil::poly;

namespace {
constexpr VarIndex X = 0, Y = 1, Z = 2;
}

TEST_CASE("degree in one variable") {
  CHECK(degree(poly("x^2*y + z"), X) == 2);
  CHECK(degree(Polynomial(7), X) == 0);
  CHECK(degree(Polynomial(), X) == -1);
  CHECK(degree(poly("x^2*y + z"), Y) == 1);
  CHECK(degree(poly("x^2*y + z"), Z) == 1);
}

TEST_CASE("total degree") {
  CHECK(total_degree(poly("x^2*y + z")) == 3);
  CHECK(total_degree(Polynomial(5)) == 0);
  CHECK(total_degree(poly("x^3 - x*y*z")) == 3);
  CHECK_THROWS_AS(total_degree(Polynomial()), AlgebraError);
}

TEST_CASE("coefficients collect by power") {
  auto c = coefficients(poly("x^2 + y^2 - 1"), X);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Polynomial(1));
  CHECK(c[1].is_zero());
  CHECK(c[2] == poly("y^2 - 1"));

  auto d = coefficients(poly("x*y - z"), X);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == poly("y"));
  CHECK(d[1] == poly("-z"));

  auto e = coefficients(poly("y^2"), X);
  REQUIRE(e.size() == 1);
  CHECK(e[0] == poly("y^2"));
}

TEST_CASE("from_coefficients inverts coefficients") {
  for (auto* text : {"x^2 + y^2 - 1", "x^3*y - 2*x*z + 5", "y*z", "x^4 - x"}) {
    auto f = poly(text);
    for (VarIndex v : {X, Y, Z}) {
      auto c = coefficients(f, v);
      CHECK(from_coefficients(c, v) == f);
    }
  }
}

TEST_CASE("ring arithmetic") {
  auto f = poly("x + y");
  auto g = poly("x - y");
  CHECK(f * g == poly("x^2 - y^2"));
  CHECK(f + g == poly("2*x"));
  CHECK(f - f == Polynomial());
  CHECK(pow(f, 2) == poly("x^2 + 2*x*y + y^2"));
  CHECK(degree(f * g, X) == degree(f, X) + degree(g, X));
  CHECK(total_degree(f * g) == total_degree(f) + total_degree(g));
}

TEST_CASE("leading term is the greatest in graded lex") {
  auto f = poly("z^2 + x*y + x^2");
  CHECK(f.leading_monomial() == Monomial::variable(X, 2));
  CHECK(leading_coefficient(poly("3*x^2*y + x - 1"), X) == poly("3*y"));
}

TEST_CASE("derivative and evaluation") {
  CHECK(derivative(poly("x^3 - 2*x*y + 7"), X) == poly("3*x^2 - 2*y"));
  CHECK(derivative(poly("y^2"), X).is_zero());
  CHECK(evaluate(poly("x^2 + y"), X, Integer(3)) == poly("y + 9"));
}

TEST_CASE("content helpers") {
  CHECK(integer_content(poly("6*x + 9")) == 3);
  CHECK(integer_content(Polynomial()) == 0);
  CHECK(sign_normalized(poly("-x + 1")) == poly("x - 1"));
  CHECK(divide_exact(poly("6*x + 9"), Integer(3)) == poly("2*x + 3"));
  CHECK(divide_exact(poly("x^2 - y^2"), poly("x + y")) == poly("x - y"));
  CHECK_THROWS_AS(divide_exact(poly("x^2 + 1"), poly("x + 1")), AlgebraError);
}

TEST_CASE("printing uses explicit operators and elides unit coefficients") {
  CHECK(testutil::str(poly("x^2 + y")) == "x^2+y");
  CHECK(testutil::str(poly("y - 3*x*z^2 + 1")) == "-3*x*z^2+y+1");
}

TEST_CASE("make_set sorts and deduplicates") {
  auto s = make_set({poly("x"), poly("y"), poly("x")});
  CHECK(s.size() == 2);
}

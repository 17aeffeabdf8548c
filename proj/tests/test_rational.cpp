#include "doctest.h"
#include "qfalab/rational.hpp"

using qfalab::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(6, 3).str() == "2/1");
  CHECK(Rational(-6, -3) == Rational(2));
}

TEST_CASE("zero denominator refused") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0, 0), std::domain_error);
}

TEST_CASE("from_string") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("arithmetic stays canonical") {
  const Rational a(1, 6), b(1, 3);
  CHECK((a + b).str() == "1/2");
  CHECK((b - a).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "1/2");
  CHECK((-b).str() == "-1/3");
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(5, 3) >= Rational(5, 3));
  CHECK(Rational(1, 3) != Rational(2, 3));
}

TEST_CASE("pow") {
  CHECK(qfalab::pow(Rational(3, 5), 2) == Rational(9, 25));
  CHECK(qfalab::pow(Rational(3, 5), 0) == Rational(1));
  CHECK(qfalab::pow(Rational(2), -2) == Rational(1, 4));
  CHECK(qfalab::pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK_THROWS_AS(qfalab::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("queries") {
  CHECK(Rational(0).is_zero());
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
  CHECK(qfalab::height(Rational(-22, 7)) == 22);
  CHECK(qfalab::height(Rational(3, 8)) == 8);
}

}

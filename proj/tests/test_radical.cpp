#include "doctest.h"
#include "qfalab/radical.hpp"

using qfalab::RadicalSignature;
using qfalab::Rational;

namespace {

RadicalSignature sqrt2() { return RadicalSignature::sqrt_term(0, Rational(1)); }
RadicalSignature sqrt3() { return RadicalSignature::sqrt_term(1, Rational(1)); }

}  // namespace

TEST_SUITE("radical") {

TEST_CASE("equality is coefficient-map identity") {
  CHECK(sqrt2() == sqrt2());
  CHECK(sqrt2() != sqrt3());
  CHECK(RadicalSignature() == RadicalSignature::from_rational(Rational(0)));
  CHECK(RadicalSignature::from_rational(Rational(2, 3)) ==
        RadicalSignature::from_rational(Rational(2, 3)));
}

TEST_CASE("zero coefficients vanish") {
  auto s = sqrt2();
  s -= sqrt2();
  CHECK(s == RadicalSignature());
  CHECK(s.terms().empty());
  CHECK(sqrt2().scaled(Rational(0)) == RadicalSignature());
}

TEST_CASE("addition groups by exponent vector") {
  auto s = sqrt2() + sqrt2();
  CHECK(s == RadicalSignature::sqrt_term(0, Rational(2)));
  auto mixed = sqrt2() + sqrt3();
  CHECK(mixed.terms().size() == 2);
  CHECK(mixed - sqrt3() == sqrt2());
}

TEST_CASE("products carry exponents past 4") {
  // sqrt(2) * sqrt(2) = 2: exponents 2+2 wrap to 0 with one factor of the prime
  CHECK(sqrt2() * sqrt2() == RadicalSignature::from_rational(Rational(2)));
  // fourth roots: three of them make exponent 3, a fourth wraps to the prime
  auto q = RadicalSignature::fourth_root_term(2, Rational(1));
  auto q2 = q * q;
  CHECK(q2 == RadicalSignature::sqrt_term(2, Rational(1)));
  CHECK(q2 * q2 == RadicalSignature::from_rational(Rational(5)));
  CHECK(q.has_quarter_terms());
  CHECK_FALSE(sqrt2().has_quarter_terms());
}

TEST_CASE("decimal rendering") {
  CHECK(qfalab::radical_to_decimal(sqrt2(), 9) == "1.414213562");
  CHECK(qfalab::radical_to_decimal(sqrt2() + sqrt3(), 8) == "3.14626437");
  CHECK(qfalab::radical_to_decimal(RadicalSignature(), 12) == "0");
  CHECK(qfalab::radical_to_decimal(RadicalSignature::from_rational(Rational(-1)), 5) ==
        "-1.00000");
  // sqrt(2)*sqrt(7) = sqrt(14)
  auto s14 = sqrt2() * RadicalSignature::sqrt_term(3, Rational(1));
  CHECK(qfalab::radical_to_decimal(s14, 30) == "3.741657386773941385583748732317");
}

TEST_CASE("digit range enforced") {
  CHECK_THROWS_AS(qfalab::radical_to_decimal(sqrt2(), 0), std::invalid_argument);
  CHECK_THROWS_AS(qfalab::radical_to_decimal(sqrt2(), 51), std::invalid_argument);
  CHECK_NOTHROW(qfalab::radical_to_decimal(sqrt2(), 50));
}

TEST_CASE("scaled integer magnitude") {
  // sqrt(2) at 3 digits is 1414 in scaled units, rounded from 1414.2
  CHECK(qfalab::radical_scaled(sqrt2(), 3) == 1414);
  // rounding is half away from zero: 1/2 at 1 digit -> 5
  CHECK(qfalab::radical_scaled(RadicalSignature::from_rational(Rational(1, 2)), 1) == 5);
  CHECK(qfalab::radical_scaled(RadicalSignature::from_rational(Rational(-1, 2)), 1) == -5);
}

TEST_CASE("fourth root slot must exist") {
  CHECK_NOTHROW(RadicalSignature::fourth_root_term(5, Rational(1)));
  CHECK_THROWS_AS(RadicalSignature::fourth_root_term(6, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(RadicalSignature::sqrt_term(6, Rational(1)), std::invalid_argument);
}

}

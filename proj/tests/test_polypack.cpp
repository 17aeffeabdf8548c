#include "doctest.h"
#include "qfalab/polypack.hpp"

#include <stdexcept>

using qfalab::PentadicFraction;
using qfalab::Polynomial;
using qfalab::Rational;

TEST_SUITE("polypack") {

TEST_CASE("pentadic canonical form") {
  PentadicFraction z;
  CHECK(z.numerator() == 0);
  CHECK(z.level() == 0);
  CHECK(z.value() == Rational(0));

  PentadicFraction p(mpz_class(10), 2);  // 10/25 reduces to 2/5
  CHECK(p.numerator() == 2);
  CHECK(p.level() == 1);
  CHECK(p.value() == Rational(2, 5));

  PentadicFraction one(mpz_class(25), 2);  // 25/25 reduces to the endpoint 1
  CHECK(one.numerator() == 1);
  CHECK(one.level() == 0);
  CHECK_FALSE(one.proper());
  CHECK(p.proper());
  CHECK(z.proper());

  CHECK_THROWS_AS(PentadicFraction(mpz_class(-1), 1), std::invalid_argument);
  CHECK_THROWS_AS(PentadicFraction(mpz_class(26), 2), std::invalid_argument);
}

TEST_CASE("pentadic from rational") {
  auto p = PentadicFraction::from_rational(Rational(2, 5));
  CHECK(p == PentadicFraction(mpz_class(2), 1));
  CHECK(PentadicFraction::from_rational(Rational(0)) == PentadicFraction());
  CHECK(PentadicFraction::from_rational(Rational(1)).proper() == false);
  CHECK_THROWS_AS(PentadicFraction::from_rational(Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(PentadicFraction::from_rational(Rational(-1, 5)), std::invalid_argument);
  CHECK_THROWS_AS(PentadicFraction::from_rational(Rational(6, 5)), std::invalid_argument);
}

TEST_CASE("pair packing values") {
  CHECK(qfalab::pack_pair(Rational(1, 5), Rational(2, 5)) ==
        Rational(395538, 244140625));
  CHECK(qfalab::pack_pair(Rational(1), Rational(1)) == Rational(9));
  CHECK(qfalab::pack_pair(Rational(0), Rational(0)) == Rational(0));
  // pentadic overload agrees with the rational one
  CHECK(qfalab::pack_pair(PentadicFraction(mpz_class(1), 1),
                          PentadicFraction(mpz_class(2), 1)) ==
        qfalab::pack_pair(Rational(1, 5), Rational(2, 5)));
}

TEST_CASE("pack bound on the unit square") {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      auto v = qfalab::pack_pair(Rational(a, 5), Rational(b, 5));
      CHECK(v >= Rational(0));
      CHECK(v <= Rational(9));
    }
}

TEST_CASE("tuple packing folds right to left") {
  using PF = PentadicFraction;
  PF x(mpz_class(1), 1), y(mpz_class(2), 1), z(mpz_class(3), 1);
  auto inner = qfalab::pack_pair(y, z);
  auto expect = qfalab::pack_pair(x.value(), inner * Rational(1, 25));
  CHECK(qfalab::pack_tuple({x, y, z}) == expect);
  CHECK(qfalab::pack_tuple({y, z}) == qfalab::pack_pair(y, z));
  CHECK_THROWS_AS(qfalab::pack_tuple({x}), std::invalid_argument);
  CHECK_THROWS_AS(qfalab::pack_tuple({}), std::invalid_argument);
}

TEST_CASE("packed degree") {
  CHECK(qfalab::packed_degree(2) == 12);
  CHECK(qfalab::packed_degree(3) == 144);
  CHECK(qfalab::packed_degree(6) == 248832);
  CHECK_THROWS_AS(qfalab::packed_degree(1), std::invalid_argument);
}

TEST_CASE("cantor pairing") {
  CHECK(qfalab::cantor_pair(Rational(0), Rational(0)) == Rational(0));
  CHECK(qfalab::cantor_pair(Rational(1), Rational(1)) == Rational(4));
  CHECK(qfalab::cantor_pair(Rational(2), Rational(0)) == Rational(5));
}

TEST_CASE("four squares") {
  CHECK(qfalab::four_square_split(0) == std::array<std::uint64_t, 4>{0, 0, 0, 0});
  CHECK(qfalab::four_square_split(3) == std::array<std::uint64_t, 4>{1, 1, 1, 0});
  CHECK(qfalab::four_square_split(7) == std::array<std::uint64_t, 4>{2, 1, 1, 1});
  // canonical witness is the lexicographically greatest nonincreasing one
  CHECK(qfalab::four_square_split(4) == std::array<std::uint64_t, 4>{2, 0, 0, 0});
  auto big = qfalab::four_square_split(1'000'000'000ULL);
  CHECK(big[0] * big[0] + big[1] * big[1] + big[2] * big[2] + big[3] * big[3] ==
        1'000'000'000ULL);
  CHECK_THROWS_AS(qfalab::four_square_split(1'000'000'001ULL), std::invalid_argument);

  for (std::uint64_t n : {12ULL, 33ULL, 999ULL, 65535ULL}) {
    auto a = qfalab::four_square_split(n);
    CHECK(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3] == n);
    CHECK(a[0] >= a[1]);
    CHECK(a[1] >= a[2]);
    CHECK(a[2] >= a[3]);
  }
}

TEST_CASE("square completion") {
  CHECK(qfalab::square_completion(0) == 0);
  CHECK(qfalab::square_completion(4) == 0);
  CHECK(qfalab::square_completion(3) == 1);
  CHECK(qfalab::square_completion(11) == 5);
  CHECK(qfalab::square_completion(99) == 1);
}

TEST_CASE("polynomial decomposition") {
  // the pair packing expanded: x^12 + 3 x^8 y^4 + 3 x^4 y^8 + y^12 + x^4
  Polynomial f2{{{12, 0}, 1}, {{8, 4}, 3}, {{4, 8}, 3}, {{0, 12}, 1}, {{4, 0}, 1}};
  auto terms = qfalab::decompose_poly(f2);
  REQUIRE(terms.size() == 5);
  CHECK(terms[0].exps == qfalab::Monomial{4, 0});
  CHECK(terms[0].degree == 4);
  CHECK(terms[1].exps == qfalab::Monomial{0, 12});
  CHECK(terms[2].exps == qfalab::Monomial{4, 8});
  CHECK(terms[3].exps == qfalab::Monomial{8, 4});
  CHECK(terms[4].exps == qfalab::Monomial{12, 0});
  CHECK(terms[2].coeff == 3);
  CHECK(terms[2].split == std::array<std::uint64_t, 4>{1, 1, 1, 0});

  CHECK(qfalab::decompose_poly({}).empty());
  CHECK(qfalab::decompose_poly({{{1, 1}, 0}}).empty());  // zero terms drop
  Polynomial ragged{{{1}, 1}, {{1, 1}, 1}};
  CHECK_THROWS_AS(qfalab::decompose_poly(ragged), std::invalid_argument);
}

TEST_CASE("fourth powers of units are 1 mod 5") {
  // the congruence the proper-grid injectivity argument leans on
  for (int n = 1; n <= 10000; ++n) {
    if (n % 5 == 0) continue;
    long r = 1;
    for (int i = 0; i < 4; ++i) r = r * n % 5;
    CHECK(r == 1);
  }
}

TEST_CASE("injectivity scan of the packing") {
  auto res = qfalab::injectivity_scan(
      [](const Rational& x, const Rational& y) { return qfalab::pack_pair(x, y); }, 1);
  CHECK(res.injective);
  CHECK_FALSE(res.collision.has_value());
  CHECK(res.pairs_scanned == 25);
}

TEST_CASE("scan of the trivial grid") {
  auto res = qfalab::injectivity_scan(
      [](const Rational& x, const Rational& y) { return qfalab::cantor_pair(x, y); }, 0);
  CHECK(res.injective);
  CHECK(res.pairs_scanned == 1);
  CHECK_THROWS_AS(qfalab::injectivity_scan(
                      [](const Rational& x, const Rational& y) { return x + y; }, 4),
                  std::invalid_argument);
}

TEST_CASE("scan finds the cantor collision with its earlier witness") {
  auto res = qfalab::injectivity_scan(
      [](const Rational& x, const Rational& y) { return qfalab::cantor_pair(x, y); }, 2);
  CHECK_FALSE(res.injective);
  REQUIRE(res.collision.has_value());
  CHECK(res.collision->x1 == Rational(2, 25));
  CHECK(res.collision->y1 == Rational(11, 25));
  CHECK(res.collision->x2 == Rational(3, 25));
  CHECK(res.collision->y2 == Rational(9, 25));
  CHECK(res.collision->value == Rational(297, 625));
  CHECK(res.pairs_scanned == 48);
}

}

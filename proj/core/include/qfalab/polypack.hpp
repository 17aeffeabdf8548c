#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qfalab/rational.hpp"

namespace qfalab {

// Nonnegative fraction a / 5^k in [0, 1], canonical: 5 never divides a
// nonzero numerator, and level 0 only carries 0 and 1. proper() marks values
// strictly below 1, which form the packing domain; the closed endpoint is
// still representable because intermediate packing results can hit it.
class PentadicFraction {
 public:
  PentadicFraction() = default;  // zero
  PentadicFraction(const mpz_class& numerator, unsigned level);
  // Requires a 5-power denominator and a value in [0, 1].
  static PentadicFraction from_rational(const Rational& q);

  const mpz_class& numerator() const { return num_; }
  unsigned level() const { return level_; }
  Rational value() const;
  bool proper() const;

  friend bool operator==(const PentadicFraction&, const PentadicFraction&) = default;

 private:
  mpz_class num_ = 0;
  unsigned level_ = 0;
};

// The injective packing step (x^4 + y^4)^3 + x^4. Any exact rationals are
// accepted; injectivity is only promised on proper pentadic pairs. The value
// never exceeds 9 on [0, 1]^2.
Rational pack_pair(const Rational& x, const Rational& y);
Rational pack_pair(const PentadicFraction& x, const PentadicFraction& y);

// Nested k-ary packing, k >= 2: fold pack_pair right to left, renormalizing
// every intermediate by 1/25 so the 9-bound lands back inside [0, 1].
Rational pack_tuple(const std::vector<PentadicFraction>& xs);

// Total degree of the k-ary packing as a polynomial: 12^(k-1).
mpz_class packed_degree(int k);

// Classic pairing polynomial (x + y)(x + y + 1)/2 + x; injective on naturals
// but not on the pentadic grid, which is what the scan below demonstrates.
Rational cantor_pair(const Rational& x, const Rational& y);

// Canonical Lagrange witness: the lexicographically greatest nonincreasing
// quadruple with a0^2 + a1^2 + a2^2 + a3^2 = n. Requires n <= 10^9.
std::array<std::uint64_t, 4> four_square_split(std::uint64_t n);

// Minimal d >= 0 with s + d a perfect square.
std::uint64_t square_completion(std::uint64_t s);

// Multivariate polynomial with nonnegative integer coefficients; the exponent
// vector length is the variable count.
using Monomial = std::vector<std::uint32_t>;
using Polynomial = std::map<Monomial, std::uint64_t>;

struct PolyTerm {
  std::uint64_t coeff = 0;
  Monomial exps;
  std::uint64_t degree = 0;
  std::array<std::uint64_t, 4> split{};  // four_square_split of coeff
};

// Terms in (total degree, exponent vector) order, each with its coefficient's
// four-square witness attached.
std::vector<PolyTerm> decompose_poly(const Polynomial& p);

struct ScanCollision {
  Rational x1, y1, x2, y2, value;
};

struct ScanResult {
  bool injective = true;
  std::optional<ScanCollision> collision;  // first repeat in scan order
  std::uint64_t pairs_scanned = 0;
};

// Exhaustive collision scan of a binary function over the level-k_max grid
// {a/5^k_max : 0 <= a < 5^k_max}^2. Pairs whose coordinates both have
// numerator coprime to 5 (the fractions genuinely of the finest level) are
// scanned first, row-major, then the rest, row-major; the first value seen
// twice is reported together with its earlier witness. k_max <= 3.
ScanResult injectivity_scan(
    const std::function<Rational(const Rational&, const Rational&)>& eval, int k_max);

}  // namespace qfalab

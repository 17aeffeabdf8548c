#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "qfalab/rational.hpp"

namespace qfalab {

// The fixed radical basis: fourth roots of the first six primes.
inline constexpr std::array<int, 6> kRadicalPrimes{2, 3, 5, 7, 11, 13};

// Exponent vector: slot i holds the exponent of kRadicalPrimes[i]^(1/4),
// always reduced into {0, 1, 2, 3}. The all-zero vector is the rational term.
using RadExp = std::array<std::uint8_t, 6>;

// Finite Q-linear combination  sum_e  c_e * prod_i p_i^(e_i / 4).
//
// Canonical sparse form: zero coefficients are never stored, so two values
// are equal iff their term maps are identical. For signatures whose exponents
// are all even this componentwise equality coincides with equality of the
// represented real numbers (square roots of distinct squarefree products are
// linearly independent over Q); for quarter exponents the same independence
// holds, and has_quarter_terms() lets callers report which regime they are in.
class RadicalSignature {
 public:
  RadicalSignature() = default;

  static RadicalSignature from_rational(const Rational& c);
  // coeff * sqrt(p), i.e. exponent 2 at one slot.
  static RadicalSignature sqrt_term(int prime_index, const Rational& coeff);
  // coeff * p^(1/4), exponent 1 at one slot.
  static RadicalSignature fourth_root_term(int prime_index, const Rational& coeff);

  void add_term(const RadExp& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<RadExp, Rational>& terms() const { return terms_; }
  bool has_quarter_terms() const;

  RadicalSignature& operator+=(const RadicalSignature& o);
  RadicalSignature& operator-=(const RadicalSignature& o);
  friend RadicalSignature operator+(RadicalSignature a, const RadicalSignature& b) { return a += b; }
  friend RadicalSignature operator-(RadicalSignature a, const RadicalSignature& b) { return a -= b; }
  friend RadicalSignature operator-(const RadicalSignature& a);
  friend RadicalSignature operator*(const RadicalSignature& a, const RadicalSignature& b);

  RadicalSignature scaled(const Rational& c) const;

  friend bool operator==(const RadicalSignature& a, const RadicalSignature& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const RadicalSignature& a, const RadicalSignature& b) {
    return !(a == b);
  }
  // Lexicographic on the term map, so signatures can key ordered containers.
  friend bool operator<(const RadicalSignature& a, const RadicalSignature& b) {
    return a.terms_ < b.terms_;
  }

 private:
  std::map<RadExp, Rational> terms_;
};

// Decimal expansion to exactly `digits` digits after the point, computed with
// 25 guard digits of integer working precision and rounded half away from
// zero. The zero signature prints "0". Requires 1 <= digits <= 50.
std::string radical_to_decimal(const RadicalSignature& s, int digits);

// round(value * 10^digits) under the same guard-digit scheme; exact threshold
// comparisons in tests go through this instead of the printed string.
mpz_class radical_scaled(const RadicalSignature& s, int digits);

}  // namespace qfalab

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace qfalab {

// Exact rational scalar. Invariant: always canonical, i.e. denominator > 0
// and gcd(|numerator|, denominator) = 1; zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);

  // Accepts "n" and "n/d" with optional leading '-', base 10 only.
  static Rational from_string(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  // Canonical text form "n/d"; the denominator is always printed, "0/1" included.
  std::string str() const;

  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, long e);

// Larger of |numerator| and denominator; the usual height of a rational.
mpz_class height(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace qfalab

#include "qfalab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qfalab {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (sgn(d) == 0) throw std::domain_error("rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text));
    return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse \"" + text + "\"");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r.v_ = -r.v_;
  return r;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base.is_zero()) throw std::domain_error("rational: 0 to a negative power");
    return pow(Rational(1) / base, -e);
  }
  Rational acc(1);
  Rational b = base;
  for (unsigned long k = static_cast<unsigned long>(e); k != 0; k >>= 1) {
    if (k & 1) acc *= b;
    if (k >> 1) b *= b;
  }
  return acc;
}

mpz_class height(const Rational& q) {
  mpz_class n = ::abs(q.num());
  return n > q.den() ? n : q.den();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace qfalab

#include "qfalab/quaternion.hpp"

#include <stdexcept>

namespace qfalab {

QuatRat quat_identity() { return {Rational(1), Rational(0), Rational(0), Rational(0)}; }

QuatRat quat_gen_a() { return {Rational(3, 5), Rational(4, 5), Rational(0), Rational(0)}; }

QuatRat quat_gen_b() { return {Rational(3, 5), Rational(0), Rational(4, 5), Rational(0)}; }

QuatRat qmul(const QuatRat& p, const QuatRat& q) {
  return {
      p.r * q.r - p.x * q.x - p.y * q.y - p.z * q.z,
      p.r * q.x + p.x * q.r - p.y * q.z + p.z * q.y,
      p.r * q.y + p.x * q.z + p.y * q.r - p.z * q.x,
      p.r * q.z - p.x * q.y + p.y * q.x + p.z * q.r,
  };
}

QuatRat qconj(const QuatRat& q) { return {q.r, -q.x, -q.y, -q.z}; }

Rational qnorm2(const QuatRat& q) {
  return q.r * q.r + q.x * q.x + q.y * q.y + q.z * q.z;
}

bool is_unit(const QuatRat& q) { return qnorm2(q) == Rational(1); }

QuatRat qinv(const QuatRat& q) {
  const Rational n = qnorm2(q);
  if (n.is_zero()) throw std::domain_error("quaternion: zero has no inverse");
  const QuatRat c = qconj(q);
  return {c.r / n, c.x / n, c.y / n, c.z / n};
}

QuatRat qpow(const QuatRat& q, long e) {
  if (e < 0) return qpow(qinv(q), -e);
  QuatRat acc = quat_identity();
  QuatRat b = q;
  for (unsigned long k = static_cast<unsigned long>(e); k != 0; k >>= 1) {
    if (k & 1) acc = qmul(acc, b);
    if (k >> 1) b = qmul(b, b);
  }
  return acc;
}

QuatRat word_quaternion(const FreeWord& w) {
  QuatRat acc = quat_identity();
  for (const auto& s : w.syllables()) {
    const QuatRat g = s.base == FreeLetter::A ? quat_gen_a() : quat_gen_b();
    acc = qmul(acc, qpow(g, s.exp));
  }
  return acc;
}

}  // namespace qfalab

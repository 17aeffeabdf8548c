#pragma once

#include "qfalab/rational.hpp"
#include "qfalab/words.hpp"

namespace qfalab {

// r + x*i + y*j + z*k with exact rational components.
struct QuatRat {
  Rational r, x, y, z;

  friend bool operator==(const QuatRat&, const QuatRat&) = default;
};

QuatRat quat_identity();
// The two Lipschitz-style unit generators: (3 + 4i)/5 and (3 + 4j)/5. They
// generate a free group, which is what makes the word encoding injective.
QuatRat quat_gen_a();
QuatRat quat_gen_b();

// Product under the sign convention i*j = -k, j*k = -i, k*i = -j (the mirror
// of the textbook rule). The whole pipeline is wired to this convention: it
// is exactly the one that makes quat_to_matrix multiplicative in word order.
QuatRat qmul(const QuatRat& p, const QuatRat& q);
QuatRat qconj(const QuatRat& q);
Rational qnorm2(const QuatRat& q);
bool is_unit(const QuatRat& q);
QuatRat qinv(const QuatRat& q);       // throws std::domain_error on zero
QuatRat qpow(const QuatRat& q, long e);  // negative e through the inverse

// Word image under a -> quat_gen_a, b -> quat_gen_b; empty word -> 1.
QuatRat word_quaternion(const FreeWord& w);

}  // namespace qfalab

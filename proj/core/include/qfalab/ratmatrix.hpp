#pragma once

#include <array>
#include <string>
#include <vector>

#include "qfalab/quaternion.hpp"
#include "qfalab/rational.hpp"

namespace qfalab {

// Dense exact matrix, row-major, 0-based accessors.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);  // zero-filled
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return e_[idx(i, j)]; }
  const Rational& at(int i, int j) const { return e_[idx(i, j)]; }

  RatMatrix transpose() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;  // M v

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  // Canonical content string (dims + entries), usable as an exact map key.
  std::string key() const;

 private:
  std::size_t idx(int i, int j) const;
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

RatMatrix dsum(const RatMatrix& a, const RatMatrix& b);
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
RatMatrix kron_power(const RatMatrix& a, int i);  // i >= 0; i = 0 gives [1]

bool is_orthogonal(const RatMatrix& m);
bool is_projection(const RatMatrix& m);  // symmetric and idempotent

// 4x4 orthogonal image of a unit quaternion on the (1, i, j, k) coordinate
// line: first row is the component vector (r, x, y, z) itself, and the map is
// multiplicative for qmul's convention, quat_to_matrix(qmul(p, q)) =
// quat_to_matrix(p) * quat_to_matrix(q).
RatMatrix quat_to_matrix(const QuatRat& q);

// Full encoding chain for a word over 1-based alphabet indices:
// binary_encode, then the quaternion image, then the 4x4 representation.
// Injective: distinct words give matrices with distinct first rows.
RatMatrix word_matrix(const std::vector<int>& word);

// Absolute values of entries (0,0), (0,1), (0,2). Distinct words over the
// index alphabet always get distinct keys, even though entry signs and the
// fourth entry are dropped.
std::array<Rational, 3> abs_key(const RatMatrix& m);  // pre: 4x4

}  // namespace qfalab

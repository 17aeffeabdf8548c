#include "qfalab/ratmatrix.hpp"

#include <stdexcept>

namespace qfalab {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
  e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

std::size_t RatMatrix::idx(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("matrix: index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(j);
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix: vector length mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
  for (int i = 0; i < rows_; ++i) {
    Rational acc(0);
    for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix: product shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix: sum shape mismatch");
  RatMatrix c(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

std::string RatMatrix::key() const {
  std::string out = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (const auto& x : e_) {
    out += x.str();
    out += ',';
  }
  return out;
}

RatMatrix dsum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rational& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
    }
  return c;
}

RatMatrix kron_power(const RatMatrix& a, int i) {
  if (i < 0) throw std::invalid_argument("matrix: negative Kronecker power");
  RatMatrix acc = RatMatrix::identity(1);
  for (int k = 0; k < i; ++k) acc = kron(acc, a);
  return acc;
}

bool is_orthogonal(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return m * m.transpose() == RatMatrix::identity(m.rows());
}

bool is_projection(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return m == m.transpose() && m * m == m;
}

// Rows are the images of the basis line (1, i, j, k); with qmul's convention
// the resulting map is a homomorphism in plain word order (checked against
// random products in the tests, not just spot values).
RatMatrix quat_to_matrix(const QuatRat& q) {
  RatMatrix m(4, 4);
  const Rational &r = q.r, &x = q.x, &y = q.y, &z = q.z;
  m.at(0, 0) = r;  m.at(0, 1) = x;  m.at(0, 2) = y;  m.at(0, 3) = z;
  m.at(1, 0) = -x; m.at(1, 1) = r;  m.at(1, 2) = z;  m.at(1, 3) = -y;
  m.at(2, 0) = -y; m.at(2, 1) = -z; m.at(2, 2) = r;  m.at(2, 3) = x;
  m.at(3, 0) = -z; m.at(3, 1) = y;  m.at(3, 2) = -x; m.at(3, 3) = r;
  return m;
}

RatMatrix word_matrix(const std::vector<int>& word) {
  return quat_to_matrix(word_quaternion(binary_encode(word)));
}

std::array<Rational, 3> abs_key(const RatMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("abs_key: expects a 4x4 matrix");
  return {m.at(0, 0).abs(), m.at(0, 1).abs(), m.at(0, 2).abs()};
}

}  // namespace qfalab

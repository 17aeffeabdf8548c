#include "qfalab/qfa.hpp"

#include <stdexcept>

namespace qfalab {

namespace {

// The 4x4 shape check: a matrix is a quaternion image iff it equals the
// representation rebuilt from its own first row.
bool is_quaternion_image(const RatMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) return false;
  return m == quat_to_matrix(QuatRat{m.at(0, 0), m.at(0, 1), m.at(0, 2), m.at(0, 3)});
}

Rational top_row_norm2(const RatMatrix& m) {
  Rational acc(0);
  for (int j = 0; j < m.cols(); ++j) acc += m.at(0, j) * m.at(0, j);
  return acc;
}

}  // namespace

std::vector<std::string> validate(const Qfa& q) {
  std::vector<std::string> bad;
  if (q.dimension <= 0) bad.push_back("dimension must be positive");
  if (q.projection.rows() != q.dimension || q.projection.cols() != q.dimension)
    bad.push_back("projection shape mismatch");
  else if (!is_projection(q.projection))
    bad.push_back("projection is not a symmetric idempotent");
  for (const auto& [name, m] : q.generators) {
    if (m.rows() != q.dimension || m.cols() != q.dimension)
      bad.push_back("generator " + name + " shape mismatch");
    else if (!is_orthogonal(m))
      bad.push_back("generator " + name + " is not orthogonal");
  }
  if (static_cast<int>(q.initial.size()) != q.dimension) {
    bad.push_back("initial vector length mismatch");
  } else {
    Rational n(0);
    for (const auto& x : q.initial) n += x * x;
    if (n != Rational(1)) bad.push_back("initial vector is not unit length");
  }
  return bad;
}

Rational acceptance(const Qfa& q, const std::vector<std::string>& word) {
  std::vector<Rational> v = q.initial;
  for (const auto& letter : word) {
    auto it = q.generators.find(letter);
    if (it == q.generators.end())
      throw std::invalid_argument("qfa: unknown letter \"" + letter + "\"");
    v = it->second.apply(v);
  }
  v = q.projection.apply(v);
  Rational acc(0);
  for (const auto& x : v) acc += x * x;
  return acc;
}

char selector_char(Selector s) { return s == Selector::H ? 'H' : 'G'; }

std::string generator_name(const std::string& letter, Selector s) {
  return "L:" + letter + ":" + selector_char(s);
}

std::vector<std::string> validate(const RadicalQfa& q) {
  std::vector<std::string> bad;
  const int want_dim = q.ambiguity_extended ? 9 : 8;
  if (q.dimension != want_dim)
    bad.push_back("dimension must be " + std::to_string(want_dim) + " for this variant");
  if (q.letters.size() != q.generators.size())
    bad.push_back("letter list and generator map disagree in size");
  for (const auto& l : q.letters)
    if (!q.generators.count(l)) bad.push_back("letter " + l + " has no generator");

  auto check_blocks = [&bad](const std::string& who, const RadicalBlocks& b, bool allow_corner) {
    for (const auto* m : {&b.left, &b.right}) {
      const std::string side = m == &b.left ? "left" : "right";
      if (!is_quaternion_image(*m)) {
        bad.push_back(who + " " + side + " block is not a quaternion image");
        continue;
      }
      // For a quaternion image the unit top row is exactly orthogonality:
      // M M^T = (top row norm^2) I.
      if (top_row_norm2(*m) != Rational(1))
        bad.push_back(who + " " + side + " block breaks the unit top-row identity");
    }
    if (allow_corner && b.corner != 1 && b.corner != -1)
      bad.push_back(who + " corner must be +1 or -1");
  };

  for (const auto& [name, b] : q.generators) check_blocks("generator " + name, b, q.ambiguity_extended);
  if (q.initial_transform) {
    if (!q.trimmed) bad.push_back("initial transform only belongs to trimmed automata");
    check_blocks("initial transform", *q.initial_transform, false);
  } else if (q.trimmed) {
    bad.push_back("trimmed automaton is missing its initial transform");
  }
  if (q.trimmed && q.ambiguity_extended)
    bad.push_back("trimmed and ambiguity-extended are mutually exclusive");
  return bad;
}

RadicalSignature signature_from_blocks(const RadicalQfa& q, const RatMatrix& yl,
                                       const RatMatrix& yr) {
  RadicalSignature sig;
  if (!q.trimmed) {
    for (int j = 0; j < 3; ++j) {
      sig += RadicalSignature::sqrt_term(j, yl.at(0, j) * yl.at(0, j));
      sig += RadicalSignature::sqrt_term(3 + j, yr.at(0, j) * yr.at(0, j));
    }
    return sig;
  }
  // Trimmed: square the two first-row linear forms over the fourth-root basis.
  RadicalSignature left_form, right_form;
  for (int j = 0; j < 3; ++j) {
    left_form += RadicalSignature::fourth_root_term(j, yl.at(0, j));
    right_form += RadicalSignature::fourth_root_term(3 + j, yr.at(0, j));
  }
  sig = left_form * left_form + right_form * right_form;
  return sig;
}

RadicalSignature acceptance_signature(const RadicalQfa& q,
                                      const std::vector<std::string>& word) {
  RatMatrix yl = q.initial_transform ? q.initial_transform->left : RatMatrix::identity(4);
  RatMatrix yr = q.initial_transform ? q.initial_transform->right : RatMatrix::identity(4);
  for (const auto& letter : word) {
    auto it = q.generators.find(letter);
    if (it == q.generators.end())
      throw std::invalid_argument("qfa: unknown letter \"" + letter + "\"");
    yl = it->second.left * yl;
    yr = it->second.right * yr;
  }
  return signature_from_blocks(q, yl, yr);
}

RatMatrix full_generator(const RadicalQfa& q, const std::string& letter) {
  auto it = q.generators.find(letter);
  if (it == q.generators.end())
    throw std::invalid_argument("qfa: unknown letter \"" + letter + "\"");
  RatMatrix m = dsum(it->second.left, it->second.right);
  if (q.ambiguity_extended) {
    RatMatrix corner(1, 1);
    corner.at(0, 0) = Rational(it->second.corner);
    m = dsum(m, corner);
  }
  return m;
}

}  // namespace qfalab

#include "qfalab/kronpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfalab {

namespace {

constexpr long kDenseGuard = 4096;

RatMatrix fold_word(const std::map<std::string, RatMatrix>& bases, int n,
                    const std::vector<std::string>& word) {
  RatMatrix y = RatMatrix::identity(n);
  for (const auto& letter : word) {
    auto it = bases.find(letter);
    if (it == bases.end())
      throw std::invalid_argument("kron: unknown letter \"" + letter + "\"");
    y = it->second * y;
  }
  return y;
}

int checked_base_dim(const std::map<std::string, RatMatrix>& bases, int n) {
  if (bases.empty()) throw std::invalid_argument("kron: no base matrices");
  for (const auto& [name, m] : bases)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("kron: base " + name + " is not " + std::to_string(n) +
                                  "x" + std::to_string(n));
  return n;
}

}  // namespace

MonomialIndex monomial_index(int n, const std::vector<EntryPos>& positions,
                             const Monomial& exps) {
  if (exps.size() != positions.size())
    throw std::invalid_argument("kron: exponent count does not match positions");
  MonomialIndex out;
  for (std::size_t v = 0; v < positions.size(); ++v) {
    const auto& p = positions[v];
    if (p.row < 1 || p.row > n || p.col < 1 || p.col > n)
      throw std::invalid_argument("kron: position out of range");
    for (std::uint32_t k = 0; k < exps[v]; ++k) out.digit_pairs.push_back(p);
  }
  std::sort(out.digit_pairs.begin(), out.digit_pairs.end());
  // Mixed-radix fold: the entry of the degree-th Kronecker power picked out
  // by reading the digit rows (resp. columns) as a base-n numeral, 1-based.
  mpz_class s = 0, r = 0;
  for (const auto& d : out.digit_pairs) {
    s = s * n + (d.row - 1);
    r = r * n + (d.col - 1);
  }
  out.s = s + 1;
  out.r = r + 1;
  return out;
}

mpz_class KronPlan::dense_dimension() const {
  mpz_class dim = 4;  // trailing identity block
  for (const auto& t : terms) {
    mpz_class block;
    mpz_ui_pow_ui(block.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(t.degree));
    dim += 4 * block;
  }
  return dim;
}

KronPlan make_plan(int n, const std::vector<EntryPos>& positions, const Polynomial& poly) {
  if (n < 1) throw std::invalid_argument("kron: base dimension must be positive");
  KronPlan plan;
  plan.n = n;
  plan.positions = positions;
  const auto terms = decompose_poly(poly);
  if (terms.empty()) throw std::invalid_argument("kron: polynomial has no terms");
  for (const auto& t : terms) {
    KronTerm kt;
    kt.coeff = t.coeff;
    kt.exps = t.exps;
    kt.degree = t.degree;
    kt.split = t.split;
    const auto mi = monomial_index(n, positions, t.exps);
    kt.s = mi.s;
    kt.r = mi.r;
    plan.terms.push_back(std::move(kt));
    plan.weight += t.coeff;
  }
  plan.delta = square_completion(plan.weight);
  plan.delta_split = four_square_split(plan.delta);
  return plan;
}

InitialVector build_initial_vector(const KronPlan& plan) {
  if (plan.dense_dimension() > kDenseGuard)
    throw std::invalid_argument("kron: dense dimension exceeds the 4096 guard");
  InitialVector v;
  for (const auto& t : plan.terms) {
    mpz_class block;
    mpz_ui_pow_ui(block.get_mpz_t(), static_cast<unsigned long>(plan.n),
                  static_cast<unsigned long>(t.degree));
    for (int copy = 0; copy < 4; ++copy) {
      const std::size_t base = v.raw.size();
      v.raw.resize(base + block.get_ui(), 0);
      v.raw[base + static_cast<std::size_t>(t.r.get_ui()) - 1] =
          static_cast<long>(t.split[static_cast<std::size_t>(copy)]);
    }
  }
  for (int k = 0; k < 4; ++k)
    v.raw.push_back(static_cast<long>(plan.delta_split[static_cast<std::size_t>(k)]));

  mpz_class norm2 = 0;
  for (const auto& x : v.raw) norm2 += x * x;
  mpz_class m;
  mpz_sqrt(m.get_mpz_t(), norm2.get_mpz_t());
  if (m * m != norm2)
    throw std::logic_error("kron: S + delta is not a perfect square");
  v.unit.reserve(v.raw.size());
  for (const auto& x : v.raw) v.unit.emplace_back(x, m);
  return v;
}

Qfa build_dense(const std::map<std::string, RatMatrix>& bases, const KronPlan& plan) {
  checked_base_dim(bases, plan.n);
  const mpz_class dim = plan.dense_dimension();
  if (dim > kDenseGuard)
    throw std::invalid_argument("kron: dense dimension " + dim.get_str() +
                                " exceeds the 4096 guard");
  const int d = static_cast<int>(dim.get_si());

  Qfa q;
  q.dimension = d;
  q.projection = RatMatrix(d, d);

  // Assemble generators block by block; all generators share the layout, so
  // walk the plan once per base matrix.
  for (const auto& [name, x] : bases) {
    RatMatrix gen = RatMatrix::identity(0);
    for (const auto& t : plan.terms) {
      const RatMatrix power = kron_power(x, static_cast<int>(t.degree));
      for (int copy = 0; copy < 4; ++copy) gen = dsum(gen, power);
    }
    gen = dsum(gen, RatMatrix::identity(4));
    q.generators.emplace(name, gen);
  }

  // Projection: each term copy keeps exactly its s coordinate; the trailing
  // block keeps nothing.
  long offset = 0;
  for (const auto& t : plan.terms) {
    mpz_class block;
    mpz_ui_pow_ui(block.get_mpz_t(), static_cast<unsigned long>(plan.n),
                  static_cast<unsigned long>(t.degree));
    const long b = block.get_si();
    for (int copy = 0; copy < 4; ++copy) {
      const long pos = offset + t.s.get_si() - 1;
      q.projection.at(static_cast<int>(pos), static_cast<int>(pos)) = Rational(1);
      offset += b;
    }
  }

  q.initial = build_initial_vector(plan).unit;
  return q;
}

Rational eval_poly(const std::map<std::string, RatMatrix>& bases, const KronPlan& plan,
                   const std::vector<std::string>& word) {
  checked_base_dim(bases, plan.n);
  const RatMatrix y = fold_word(bases, plan.n, word);
  Rational total(0);
  for (const auto& t : plan.terms) {
    Rational mono(static_cast<long>(t.coeff));
    for (const auto& d : monomial_index(plan.n, plan.positions, t.exps).digit_pairs) {
      const Rational& e = y.at(d.row - 1, d.col - 1);
      mono *= e * e;
    }
    total += mono;
  }
  return total;
}

Rational eval_lazy(const std::map<std::string, RatMatrix>& bases, const KronPlan& plan,
                   const std::vector<std::string>& word) {
  return eval_poly(bases, plan, word) / Rational(static_cast<long>(plan.norm_weight()));
}

const std::vector<EntryPos>& key_positions_8() {
  static const std::vector<EntryPos> pos{{1, 1}, {1, 2}, {1, 3}, {5, 5}, {5, 6}, {5, 7}};
  return pos;
}

Rational eval_packed_key(const std::map<std::string, RatMatrix>& bases,
                         const std::vector<std::string>& word) {
  checked_base_dim(bases, 8);
  const RatMatrix y = fold_word(bases, 8, word);
  std::vector<PentadicFraction> coords;
  coords.reserve(6);
  for (const auto& p : key_positions_8()) {
    const Rational& e = y.at(p.row - 1, p.col - 1);
    coords.push_back(PentadicFraction::from_rational(e * e));
  }
  return pack_tuple(coords);
}

}  // namespace qfalab

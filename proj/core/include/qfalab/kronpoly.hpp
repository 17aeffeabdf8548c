#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qfalab/polypack.hpp"
#include "qfalab/qfa.hpp"

namespace qfalab {

// Positions are 1-based (row, col) entries of an n x n base matrix.
struct EntryPos {
  int row = 1, col = 1;
  friend auto operator<=>(const EntryPos&, const EntryPos&) = default;
};

// A monomial in squared matrix entries, rewritten as one entry of a Kronecker
// power: the digit pairs spell out which entry of X^(tensor degree) the
// monomial is, s and r are the resulting 1-based row and column multi-indices.
struct MonomialIndex {
  std::vector<EntryPos> digit_pairs;  // sorted, one per unit of degree
  mpz_class s = 1, r = 1;
};

MonomialIndex monomial_index(int n, const std::vector<EntryPos>& positions,
                             const Monomial& exps);

struct KronTerm {
  std::uint64_t coeff = 0;
  Monomial exps;
  std::uint64_t degree = 0;
  std::array<std::uint64_t, 4> split{};  // coeff as a sum of four squares
  mpz_class s = 1, r = 1;
};

// Evaluation plan for one polynomial with positive integer coefficients in
// the squared selected entries. weight is the coefficient sum S; delta the
// minimal completion making S + delta a perfect square, so the initial
// vector below can be exactly unit.
struct KronPlan {
  int n = 0;
  std::vector<EntryPos> positions;
  std::vector<KronTerm> terms;
  std::uint64_t weight = 0;
  std::uint64_t delta = 0;
  std::array<std::uint64_t, 4> delta_split{};

  std::uint64_t norm_weight() const { return weight + delta; }  // a perfect square

  // Block layout of the conceptual dense automaton: per term, four copies of
  // the degree-th Kronecker power (one per four-square component of the
  // coefficient), then one trailing 4x4 identity block carrying delta.
  mpz_class dense_dimension() const;
};

KronPlan make_plan(int n, const std::vector<EntryPos>& positions, const Polynomial& poly);

// The unnormalized initial vector (component d_{t,k} at each term copy's
// column index, the four-square split of delta on the trailing block) and its
// exact unit normalization by sqrt(S + delta).
struct InitialVector {
  std::vector<mpz_class> raw;
  std::vector<Rational> unit;
};
InitialVector build_initial_vector(const KronPlan& plan);

// Materializes the automaton. Refuses plans whose dense dimension exceeds
// 4096; eval_lazy below has no such limit.
Qfa build_dense(const std::map<std::string, RatMatrix>& bases, const KronPlan& plan);

// Acceptance value of the conceptual dense automaton computed in the base
// dimension: fold Y over the word, evaluate the polynomial at the squared
// selected entries of Y, divide by S + delta. Agrees with
// acceptance(build_dense(...), w) exactly.
Rational eval_lazy(const std::map<std::string, RatMatrix>& bases, const KronPlan& plan,
                   const std::vector<std::string>& word);

// The raw polynomial value, i.e. eval_lazy times S + delta.
Rational eval_poly(const std::map<std::string, RatMatrix>& bases, const KronPlan& plan,
                   const std::vector<std::string>& word);

// The six key entries of the 8x8 two-block reduction generators: top-row
// entries 1..3 of each block.
const std::vector<EntryPos>& key_positions_8();

// The six-coordinate nested packing evaluated at the squared key entries of
// the folded 8x8 product. This is the arbitrarily-high-degree polynomial
// route; it is never materialized as a plan, which is the point.
Rational eval_packed_key(const std::map<std::string, RatMatrix>& bases,
                         const std::vector<std::string>& word);

}  // namespace qfalab

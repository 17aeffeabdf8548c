#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfalab/radical.hpp"
#include "qfalab/ratmatrix.hpp"

namespace qfalab {

// Measure-once automaton with exact rational data. A word is a sequence of
// letter names; acceptance applies the first letter's generator first.
struct Qfa {
  int dimension = 0;
  RatMatrix projection;
  std::map<std::string, RatMatrix> generators;
  std::vector<Rational> initial;
};

// Empty result means the automaton is well-formed: projection symmetric and
// idempotent, all generators orthogonal of the right shape, initial vector of
// exact unit length.
std::vector<std::string> validate(const Qfa& q);

// ||P X_{w_k} ... X_{w_1} u||^2, exact. Unknown letters throw.
Rational acceptance(const Qfa& q, const std::vector<std::string>& word);

enum class Selector : std::uint8_t { H, G };

char selector_char(Selector s);
// Canonical generator naming for compiled automata: "L:<letter>:<H|G>".
std::string generator_name(const std::string& letter, Selector s);

struct RadicalBlocks {
  RatMatrix left, right;  // 4x4 quaternion images
  int corner = 1;         // only meaningful on ambiguity-extended automata
};

// Two-block automaton whose initial vector and projection are implicit: the
// vector carries fourth roots of the six basis primes, three per block
// ((p1^(1/4), p2^(1/4), p3^(1/4), 0 | p4^(1/4), p5^(1/4), p6^(1/4), 0), all
// over a constant normalization), and the projection keeps coordinates 1 and
// 5. Acceptance values are therefore evaluated symbolically as
// RadicalSignatures, with the constant denominator left out; it cancels from
// every equality comparison.
//
// `letters` fixes the canonical enumeration order (it is not the
// lexicographic order of the names). `initial_transform` is the folded
// first-step transform of a trimmed automaton; absent means identity.
struct RadicalQfa {
  int dimension = 8;  // 9 when ambiguity_extended
  bool ambiguity_extended = false;
  bool trimmed = false;
  std::vector<std::string> letters;
  std::map<std::string, RadicalBlocks> generators;
  std::optional<RadicalBlocks> initial_transform;
};

std::vector<std::string> validate(const RadicalQfa& q);

// The numerator of the acceptance value: for each block, the squared
// first-row entries weighted by the matching prime radicals. Untrimmed
// automata stay on the square-root basis (coefficient of sqrt(p_j) is the
// squared (1,j) entry of the block owning p_j). Trimmed automata fold the
// initial transform in and expand on the fourth-root basis instead, cross
// terms included, because the folded transform mixes fourth roots across
// coordinates. The corner of an ambiguity-extended automaton never reaches
// the signature: its projection row is zero.
RadicalSignature acceptance_signature(const RadicalQfa& q,
                                      const std::vector<std::string>& word);

// The same value from already-folded block products (initial transform
// included). Lets enumerators share prefix products instead of refolding
// every word from scratch.
RadicalSignature signature_from_blocks(const RadicalQfa& q, const RatMatrix& yl,
                                       const RatMatrix& yr);

// The generator as one dense matrix: dsum of the blocks, plus the corner as a
// trailing 1x1 block when ambiguity-extended. This is what matrix-level
// distinctness checks look at.
RatMatrix full_generator(const RadicalQfa& q, const std::string& letter);

}  // namespace qfalab

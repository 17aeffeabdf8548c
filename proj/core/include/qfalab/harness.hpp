#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfalab/mmpcp.hpp"
#include "qfalab/qfa.hpp"
#include "qfalab/words.hpp"

namespace qfalab {

// Hard ceiling on enumerated words per search; overridable per call (the CLI
// maps the QFALAB_BUDGET environment variable onto it). The bound is checked
// up front from the alphabet size, never discovered mid-run.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct CollisionPair {
  std::vector<std::string> word1;  // enumerated first
  std::vector<std::string> word2;
  std::string value;  // canonical serialization of the shared acceptance value
};

struct CollisionReport {
  std::string digest;  // of the automaton's canonical JSON
  int max_len = 0;
  std::uint64_t words = 0;
  bool quarter_basis = false;  // signatures compared on the fourth-root basis
  std::vector<CollisionPair> pairs;
};

// Exhaustive equal-acceptance search over all words of length <= max_len, the
// empty word included. Enumeration is length-first, then the automaton's
// canonical letter order; each pair couples a value's first witness with a
// later word. jobs > 1 partitions subtrees by first letter; the merge is
// order-preserving, so results are identical to the sequential run.
CollisionReport collision_search(const RadicalQfa& q, int max_len,
                                 std::uint64_t budget = kDefaultBudget, int jobs = 1);
// Same over a plain rational automaton (letter order: sorted generator names).
CollisionReport collision_search(const Qfa& q, int max_len,
                                 std::uint64_t budget = kDefaultBudget, int jobs = 1);

struct IdentityCheck {
  int samples = 0;
  bool pass = true;
  std::optional<std::string> counterexample;  // word text
};

// Randomized sweep of the four component-sign identities of the quaternion
// encoding (reversal fixes r, x, y and flips z; exponent negation on one or
// both generators flips the matching components). Deterministic per seed.
IdentityCheck verify_sign_identities(int sample_count, int max_syllables,
                                     std::uint64_t seed = 0x51f0ab1eULL);

struct UniquenessCheck {
  bool pass = true;
  std::uint64_t words = 0;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> colliding;
};

// Enumerates every nonempty word of length <= max_len over the 1-based
// alphabet {1..n}, checks the exact unit top-row identity of each image and
// that abs_key never repeats. Refuses runs over 10^5 words.
UniquenessCheck verify_top_row_uniqueness(int n, int max_len);

struct FreenessCheck {
  bool pass = true;
  std::uint64_t products = 0;
};

// All nonempty positive products of the two 4x4 generator images up to the
// given length are pairwise distinct matrices (2^(L+1) - 2 of them).
FreenessCheck verify_freeness(int max_len);

enum class Verdict : std::uint8_t { ConsistentFound, ConsistentEmpty, Inconsistent };

struct EndToEndReport {
  Verdict verdict = Verdict::ConsistentEmpty;
  std::optional<MixedSolution> solution;
  CollisionReport collisions;
  bool transport_checked = false;
};

// Runs the bounded correspondence search and the signature collision search
// over the compiled automaton side by side. Consistent means both found
// something or neither did; on top of that, a found solution must transport
// to an equal-signature word pair and a found collision pair must transport
// back to a checked mixed solution, else the verdict degrades to
// Inconsistent.
EndToEndReport end_to_end(const MmpcpInstance& inst, int max_len,
                          std::uint64_t budget = kDefaultBudget, int jobs = 1);

// Solution -> pair of automaton words. The letter order is reversed: the
// automaton applies its first letter first, while the product in the
// acceptance formula grows on the left, so reading the source word backwards
// is what lines the image concatenations up in equation order.
std::pair<std::vector<std::string>, std::vector<std::string>> transport_solution(
    const MixedSolution& sol);

// Collision pair -> mixed solution, when the two words are aligned (same
// source letters positionwise after un-reversing). Unaligned pairs give
// nullopt.
std::optional<MixedSolution> transport_collision_pair(
    const std::vector<std::string>& word1, const std::vector<std::string>& word2);

}  // namespace qfalab

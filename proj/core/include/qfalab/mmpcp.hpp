#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfalab/qfa.hpp"

namespace qfalab {

// Mixed-modification correspondence instance: two morphisms h, g from words
// over `sigma` into words over `delta`, the alphabets disjoint. Images may be
// empty. The `claus` flag restricts solution shape (see brute_search).
struct MmpcpInstance {
  std::vector<std::string> sigma;
  std::vector<std::string> delta;
  std::map<std::string, std::vector<std::string>> h, g;
  bool claus = false;
};

std::vector<std::string> validate(const MmpcpInstance& inst);

// A candidate mixed solution: at every position one morphism is chosen per
// side, and the two selector rows must differ somewhere.
struct MixedSolution {
  std::vector<std::string> word;
  std::vector<Selector> sel_a, sel_b;

  friend bool operator==(const MixedSolution&, const MixedSolution&) = default;
};

// True iff the two selector-applied image concatenations are equal words.
// Ill-formed input (empty word, length mismatch, unknown letter, identical
// selector rows) throws instead of answering.
bool check_solution(const MmpcpInstance& inst, const MixedSolution& sol);

// Exhaustive bounded search, canonical order: word length, then word
// (sigma order), then selector row A, then row B (H before G). Selector pairs
// are walked positionwise with prefix pruning; the survivors for a word are
// reduced to the canonical minimum, so internal enumeration order never shows.
// Claus-flagged instances only consider words that start with the first and
// end with the last sigma letter, with neither inside. max_len <= cap.
std::optional<MixedSolution> brute_search(const MmpcpInstance& inst, int max_len,
                                          int cap = 8);

// Combined-alphabet encoding indices: sigma letters take 1..|sigma| in order,
// delta letters the following |delta| values. The whole reduction hangs on
// every letter of both alphabets going through one shared encoding.
std::map<std::string, int> combined_indices(const MmpcpInstance& inst);

// Image of one source letter under the chosen morphism, as combined indices.
std::vector<int> image_indices(const MmpcpInstance& inst, Selector s,
                               const std::string& letter);

}  // namespace qfalab

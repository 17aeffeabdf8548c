#pragma once

#include "qfalab/mmpcp.hpp"
#include "qfalab/qfa.hpp"

namespace qfalab {

// Compilers from correspondence instances to two-block automata. One QFA
// letter per (source letter, morphism) pair, named "L:<letter>:<H|G>"; the
// canonical letter order is source order with H before G. Left blocks encode
// the source letter, right blocks the chosen image, both through the shared
// combined-alphabet encoding, so a signature collision between two words is
// exactly an agreement of (source word, image word) pairs.

// 8-dimensional automaton, 2|sigma| generators.
RadicalQfa compile_injectivity(const MmpcpInstance& inst);

// 9-dimensional variant: same blocks plus a corner that is -1 exactly on the
// (first source letter, H) generator. Products pick up a (-1)^count there, so
// two factorizations with different such counts stay distinct as matrices
// even when their acceptance values collide.
RadicalQfa compile_ambiguity(const MmpcpInstance& inst);

// Alphabet trim for claus-marked instances: of the last letter's two images
// one must be a proper suffix of the other. The suffix side's generator is
// folded into the initial transform, and the surviving generator keeps only
// the quotient (the unshared prefix) on its right block, with an identity
// left block so that surviving-generator times initial-transform equals the
// original last-letter generator of the folded-away side's counterpart.
// 2|sigma|-1 generators; acceptance moves to the fourth-root basis.
RadicalQfa claus_trim(const MmpcpInstance& inst);

}  // namespace qfalab

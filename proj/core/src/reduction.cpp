#include "qfalab/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfalab {

namespace {

void require_compilable(const MmpcpInstance& inst) {
  const auto bad = validate(inst);
  if (!bad.empty()) throw std::invalid_argument("reduction: invalid instance: " + bad.front());
  if (inst.sigma.empty() || inst.delta.empty())
    throw std::invalid_argument("reduction: both alphabets must be nonempty");
}

RatMatrix encode_matrix(const std::vector<int>& indices) {
  return quat_to_matrix(word_quaternion(binary_encode(indices)));
}

RadicalBlocks make_blocks(const MmpcpInstance& inst, const std::string& letter, Selector s) {
  const auto idx = combined_indices(inst);
  RadicalBlocks b;
  b.left = encode_matrix({idx.at(letter)});
  b.right = encode_matrix(image_indices(inst, s, letter));
  return b;
}

RadicalQfa compile_blocks(const MmpcpInstance& inst) {
  require_compilable(inst);
  RadicalQfa q;
  for (const auto& letter : inst.sigma) {
    for (Selector s : {Selector::H, Selector::G}) {
      const auto name = generator_name(letter, s);
      q.letters.push_back(name);
      q.generators.emplace(name, make_blocks(inst, letter, s));
    }
  }
  return q;
}

}  // namespace

RadicalQfa compile_injectivity(const MmpcpInstance& inst) { return compile_blocks(inst); }

RadicalQfa compile_ambiguity(const MmpcpInstance& inst) {
  RadicalQfa q = compile_blocks(inst);
  q.dimension = 9;
  q.ambiguity_extended = true;
  const auto flipped = generator_name(inst.sigma.front(), Selector::H);
  for (auto& [name, b] : q.generators) b.corner = name == flipped ? -1 : 1;
  return q;
}

RadicalQfa claus_trim(const MmpcpInstance& inst) {
  require_compilable(inst);
  if (!inst.claus)
    throw std::invalid_argument("reduction: trim applies to claus-marked instances only");

  const auto& last = inst.sigma.back();
  const auto& h_img = inst.h.at(last);
  const auto& g_img = inst.g.at(last);

  auto proper_suffix = [](const std::vector<std::string>& small,
                          const std::vector<std::string>& big) {
    if (small.size() >= big.size()) return false;
    return std::equal(small.rbegin(), small.rend(), big.rbegin());
  };

  Selector folded;  // side whose image is the proper suffix
  if (proper_suffix(g_img, h_img)) folded = Selector::G;
  else if (proper_suffix(h_img, g_img)) folded = Selector::H;
  else
    throw std::invalid_argument(
        "reduction: last-letter images must be in proper-suffix relation to trim");

  const auto& big = folded == Selector::G ? h_img : g_img;
  const auto& small = folded == Selector::G ? g_img : h_img;
  const std::vector<std::string> prefix(big.begin(),
                                        big.end() - static_cast<long>(small.size()));

  RadicalQfa q;
  q.trimmed = true;
  q.initial_transform = make_blocks(inst, last, folded);

  const auto idx = combined_indices(inst);
  for (const auto& letter : inst.sigma) {
    for (Selector s : {Selector::H, Selector::G}) {
      if (letter == last && s == folded) continue;
      const auto name = generator_name(letter, s);
      RadicalBlocks b;
      if (letter == last) {
        // Quotient generator: identity left block, so that applying it right
        // after the initial transform reproduces the untrimmed last-letter
        // step of this selector exactly (one gamma(last), not two).
        b.left = RatMatrix::identity(4);
        std::vector<int> quotient;
        quotient.reserve(prefix.size());
        for (const auto& d : prefix) quotient.push_back(idx.at(d));
        b.right = encode_matrix(quotient);
      } else {
        b = make_blocks(inst, letter, s);
      }
      q.letters.push_back(name);
      q.generators.emplace(name, b);
    }
  }
  return q;
}

}  // namespace qfalab

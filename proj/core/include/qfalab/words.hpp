#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qfalab {

enum class FreeLetter : std::uint8_t { A, B };

struct Syllable {
  FreeLetter base = FreeLetter::A;
  long exp = 0;  // nonzero in a reduced word

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Freely reduced word over {a, b}: adjacent syllables have distinct bases and
// every exponent is nonzero. The default-constructed word is the empty word.
class FreeWord {
 public:
  FreeWord() = default;
  // Reduces an arbitrary syllable sequence (merges neighbours, drops zeros).
  explicit FreeWord(std::vector<Syllable> raw);

  // Text form: space-separated syllables "a", "b^3", "a^-2". Whitespace-only
  // input is the empty word. Anything else malformed throws.
  static FreeWord parse(const std::string& text);
  std::string str() const;

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  std::size_t syllable_count() const { return syl_.size(); }
  // Letter length: sum of |exponent|.
  std::size_t length() const;

  FreeWord concat(const FreeWord& o) const;
  FreeWord inverse() const;
  FreeWord reversed() const;
  FreeWord negate_a() const;     // a -> a^-1
  FreeWord negate_b() const;     // b -> b^-1
  FreeWord negate_both() const;  // both at once

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Syllable> syl_;
};

enum class WordTransform : std::uint8_t { Reverse, NegateA, NegateB, NegateBoth };

FreeWord apply_transform(const FreeWord& w, WordTransform t);

// Block encoding of 1-based alphabet indices: letter k maps to a^k b. The
// trailing b makes images self-delimiting, so no cancellation can occur
// across image boundaries and the extension to words is injective.
FreeWord binary_encode_letter(int k);
FreeWord binary_encode(const std::vector<int>& word);

}  // namespace qfalab

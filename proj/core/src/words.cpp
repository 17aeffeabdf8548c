#include "qfalab/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qfalab {

FreeWord::FreeWord(std::vector<Syllable> raw) {
  for (const auto& s : raw) {
    if (s.exp == 0) continue;
    if (!syl_.empty() && syl_.back().base == s.base) {
      syl_.back().exp += s.exp;
      if (syl_.back().exp == 0) syl_.pop_back();
    } else {
      syl_.push_back(s);
    }
  }
}

FreeWord FreeWord::parse(const std::string& text) {
  std::vector<Syllable> raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.empty()) continue;
    FreeLetter base;
    if (tok[0] == 'a') base = FreeLetter::A;
    else if (tok[0] == 'b') base = FreeLetter::B;
    else throw std::invalid_argument("word: bad syllable \"" + tok + "\"");
    long e = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() < 3)
        throw std::invalid_argument("word: bad syllable \"" + tok + "\"");
      std::size_t used = 0;
      const std::string digits = tok.substr(2);
      try {
        e = std::stol(digits, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("word: bad exponent in \"" + tok + "\"");
      }
      if (used != digits.size())
        throw std::invalid_argument("word: bad exponent in \"" + tok + "\"");
    }
    raw.push_back({base, e});
  }
  return FreeWord(std::move(raw));
}

std::string FreeWord::str() const {
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) out += ' ';
    out += s.base == FreeLetter::A ? 'a' : 'b';
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

std::size_t FreeWord::length() const {
  std::size_t n = 0;
  for (const auto& s : syl_) n += static_cast<std::size_t>(std::labs(s.exp));
  return n;
}

FreeWord FreeWord::concat(const FreeWord& o) const {
  std::vector<Syllable> raw = syl_;
  raw.insert(raw.end(), o.syl_.begin(), o.syl_.end());
  return FreeWord(std::move(raw));
}

FreeWord FreeWord::inverse() const {
  std::vector<Syllable> raw(syl_.rbegin(), syl_.rend());
  for (auto& s : raw) s.exp = -s.exp;
  return FreeWord(std::move(raw));
}

FreeWord FreeWord::reversed() const {
  std::vector<Syllable> raw(syl_.rbegin(), syl_.rend());
  return FreeWord(std::move(raw));
}

FreeWord FreeWord::negate_a() const {
  std::vector<Syllable> raw = syl_;
  for (auto& s : raw)
    if (s.base == FreeLetter::A) s.exp = -s.exp;
  return FreeWord(std::move(raw));
}

FreeWord FreeWord::negate_b() const {
  std::vector<Syllable> raw = syl_;
  for (auto& s : raw)
    if (s.base == FreeLetter::B) s.exp = -s.exp;
  return FreeWord(std::move(raw));
}

FreeWord FreeWord::negate_both() const {
  std::vector<Syllable> raw = syl_;
  for (auto& s : raw) s.exp = -s.exp;
  return FreeWord(std::move(raw));
}

FreeWord apply_transform(const FreeWord& w, WordTransform t) {
  switch (t) {
    case WordTransform::Reverse: return w.reversed();
    case WordTransform::NegateA: return w.negate_a();
    case WordTransform::NegateB: return w.negate_b();
    case WordTransform::NegateBoth: return w.negate_both();
  }
  throw std::invalid_argument("word: unknown transform");
}

FreeWord binary_encode_letter(int k) {
  if (k < 1) throw std::invalid_argument("encode: letter index must be >= 1");
  return FreeWord({{FreeLetter::A, k}, {FreeLetter::B, 1}});
}

FreeWord binary_encode(const std::vector<int>& word) {
  std::vector<Syllable> raw;
  raw.reserve(2 * word.size());
  for (int k : word) {
    if (k < 1) throw std::invalid_argument("encode: letter index must be >= 1");
    raw.push_back({FreeLetter::A, k});
    raw.push_back({FreeLetter::B, 1});
  }
  return FreeWord(std::move(raw));
}

}  // namespace qfalab

#include "qfalab/radical.hpp"

#include <stdexcept>

namespace qfalab {

namespace {

RadExp single_slot(int prime_index, std::uint8_t e) {
  if (prime_index < 0 || prime_index >= static_cast<int>(kRadicalPrimes.size()))
    throw std::invalid_argument("radical: prime index out of range");
  RadExp out{};
  out[static_cast<std::size_t>(prime_index)] = e;
  return out;
}

}  // namespace

RadicalSignature RadicalSignature::from_rational(const Rational& c) {
  RadicalSignature s;
  s.add_term(RadExp{}, c);
  return s;
}

RadicalSignature RadicalSignature::sqrt_term(int prime_index, const Rational& coeff) {
  RadicalSignature s;
  s.add_term(single_slot(prime_index, 2), coeff);
  return s;
}

RadicalSignature RadicalSignature::fourth_root_term(int prime_index, const Rational& coeff) {
  RadicalSignature s;
  s.add_term(single_slot(prime_index, 1), coeff);
  return s;
}

// Exponents are reduced mod 4 on entry; every full power of 4 moves one whole
// prime factor into the coefficient. Zero coefficients are dropped so the map
// stays canonical.
void RadicalSignature::add_term(const RadExp& e, const Rational& c) {
  if (c.is_zero()) return;
  RadExp g{};
  Rational cc = c;
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = static_cast<std::uint8_t>(e[i] % 4);
    for (int k = 0; k < e[i] / 4; ++k) cc *= Rational(kRadicalPrimes[i]);
  }
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, cc);
    return;
  }
  it->second += cc;
  if (it->second.is_zero()) terms_.erase(it);
}

bool RadicalSignature::has_quarter_terms() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x % 2 == 1) return true;
  return false;
}

RadicalSignature& RadicalSignature::operator+=(const RadicalSignature& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RadicalSignature& RadicalSignature::operator-=(const RadicalSignature& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RadicalSignature operator-(const RadicalSignature& a) {
  RadicalSignature out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

RadicalSignature operator*(const RadicalSignature& a, const RadicalSignature& b) {
  RadicalSignature out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      RadExp sum{};
      for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

RadicalSignature RadicalSignature::scaled(const Rational& c) const {
  RadicalSignature out;
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

mpz_class radical_scaled(const RadicalSignature& s, int digits) {
  if (digits < 1 || digits > 50)
    throw std::invalid_argument("radical: decimal digits must be in 1..50");
  constexpr int kGuard = 25;
  const unsigned long total_digits = static_cast<unsigned long>(digits) + kGuard;

  mpz_class scale4;  // 10^(4 * total)
  mpz_ui_pow_ui(scale4.get_mpz_t(), 10, 4 * total_digits);

  // Each term contributes c * floor((N * 10^(4T))^(1/4)) at scale 10^T, so the
  // accumulated absolute error stays below the number of terms, which the 25
  // guard digits absorb before rounding.
  Rational total(0);
  for (const auto& [e, c] : s.terms()) {
    mpz_class radicand(1);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) radicand *= kRadicalPrimes[i];
    mpz_class arg = radicand * scale4;
    mpz_class root;
    mpz_root(root.get_mpz_t(), arg.get_mpz_t(), 4);
    total += c * Rational(root);
  }

  mpz_class shift;  // 10^guard
  mpz_ui_pow_ui(shift.get_mpz_t(), 10, kGuard);

  // round(total / shift), ties away from zero
  const int sg = total.sign();
  if (sg == 0) return 0;
  mpz_class a = ::abs(total.num());
  mpz_class b = total.den() * shift;
  mpz_class r = (2 * a + b) / (2 * b);
  return sg < 0 ? mpz_class(-r) : r;
}

std::string radical_to_decimal(const RadicalSignature& s, int digits) {
  if (digits < 1 || digits > 50)
    throw std::invalid_argument("radical: decimal digits must be in 1..50");
  if (s.is_zero()) return "0";
  mpz_class r = radical_scaled(s, digits);
  const bool neg = r < 0;
  if (neg) r = -r;
  std::string body = r.get_str();
  const auto want = static_cast<std::size_t>(digits) + 1;
  if (body.size() < want) body.insert(0, want - body.size(), '0');
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return neg ? "-" + body : body;
}

}  // namespace qfalab

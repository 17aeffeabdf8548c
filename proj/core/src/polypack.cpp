#include "qfalab/polypack.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfalab {

namespace {

mpz_class five_to(unsigned k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 5, k);
  return p;
}

std::uint64_t isqrt64(std::uint64_t n) {
  mpz_class m(static_cast<unsigned long>(n));
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r.get_ui();
}

}  // namespace

PentadicFraction::PentadicFraction(const mpz_class& numerator, unsigned level)
    : num_(numerator), level_(level) {
  if (num_ < 0) throw std::invalid_argument("pentadic: negative numerator");
  if (num_ > five_to(level_)) throw std::invalid_argument("pentadic: value above 1");
  while (num_ != 0 && level_ > 0 && mpz_divisible_ui_p(num_.get_mpz_t(), 5)) {
    num_ /= 5;
    --level_;
  }
  if (num_ == 0) level_ = 0;
}

PentadicFraction PentadicFraction::from_rational(const Rational& q) {
  if (q.sign() < 0 || q > Rational(1))
    throw std::invalid_argument("pentadic: value outside [0, 1]");
  mpz_class den = q.den();
  unsigned level = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++level;
  }
  if (den != 1) throw std::invalid_argument("pentadic: denominator is not a power of 5");
  return PentadicFraction(q.num(), level);
}

Rational PentadicFraction::value() const { return Rational(num_, five_to(level_)); }

bool PentadicFraction::proper() const { return !(level_ == 0 && num_ == 1); }

Rational pack_pair(const Rational& x, const Rational& y) {
  const Rational x4 = pow(x, 4);
  const Rational s = x4 + pow(y, 4);
  return s * s * s + x4;
}

Rational pack_pair(const PentadicFraction& x, const PentadicFraction& y) {
  return pack_pair(x.value(), y.value());
}

Rational pack_tuple(const std::vector<PentadicFraction>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("pack: need at least two coordinates");
  const Rational shrink(1, 25);
  Rational acc = pack_pair(xs[xs.size() - 2], xs[xs.size() - 1]);
  for (std::size_t i = xs.size() - 2; i-- > 0;)
    acc = pack_pair(xs[i].value(), acc * shrink);
  return acc;
}

mpz_class packed_degree(int k) {
  if (k < 2) throw std::invalid_argument("pack: arity must be at least 2");
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 12, static_cast<unsigned long>(k - 1));
  return d;
}

Rational cantor_pair(const Rational& x, const Rational& y) {
  const Rational s = x + y;
  return s * (s + Rational(1)) / Rational(2) + x;
}

std::array<std::uint64_t, 4> four_square_split(std::uint64_t n) {
  if (n > 1'000'000'000ULL) throw std::invalid_argument("four squares: n above 10^9");
  std::array<std::uint64_t, 4> out{};
  // Greatest-first descending search; Lagrange guarantees a leaf exists, the
  // order makes the witness canonical.
  auto dfs = [&out](auto&& self, std::uint64_t rem, std::uint64_t cap, int slot) -> bool {
    if (slot == 4) return rem == 0;
    std::uint64_t a = std::min(cap, isqrt64(rem));
    for (;; --a) {
      out[static_cast<std::size_t>(slot)] = a;
      if (self(self, rem - a * a, a, slot + 1)) return true;
      if (a == 0) return false;
    }
  };
  dfs(dfs, n, n, 0);
  return out;
}

std::uint64_t square_completion(std::uint64_t s) {
  const std::uint64_t r = isqrt64(s);
  if (r * r == s) return 0;
  return (r + 1) * (r + 1) - s;
}

std::vector<PolyTerm> decompose_poly(const Polynomial& p) {
  std::size_t vars = 0;
  bool first = true;
  std::vector<PolyTerm> out;
  for (const auto& [exps, coeff] : p) {
    if (first) {
      vars = exps.size();
      first = false;
    } else if (exps.size() != vars) {
      throw std::invalid_argument("poly: inconsistent exponent vector lengths");
    }
    if (coeff == 0) continue;
    PolyTerm t;
    t.coeff = coeff;
    t.exps = exps;
    for (auto e : exps) t.degree += e;
    t.split = four_square_split(coeff);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const PolyTerm& a, const PolyTerm& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exps < b.exps;
  });
  return out;
}

ScanResult injectivity_scan(
    const std::function<Rational(const Rational&, const Rational&)>& eval, int k_max) {
  if (k_max < 0 || k_max > 3) throw std::invalid_argument("scan: k_max must be in 0..3");
  const mpz_class den = five_to(static_cast<unsigned>(k_max));
  const long n = den.get_si();

  ScanResult res;
  std::map<Rational, std::pair<Rational, Rational>> seen;

  auto visit = [&](long ax, long ay) -> bool {
    const Rational x(mpz_class(ax), den), y(mpz_class(ay), den);
    const Rational v = eval(x, y);
    ++res.pairs_scanned;
    auto [it, fresh] = seen.emplace(v, std::make_pair(x, y));
    if (fresh) return true;
    res.injective = false;
    res.collision = ScanCollision{it->second.first, it->second.second, x, y, v};
    return false;
  };

  // The fractions genuinely of level k_max first, then the coarser remainder;
  // row-major within each phase. This puts canonical-domain witnesses ahead
  // of rescaled copies of coarser levels.
  for (int phase = 0; phase < 2; ++phase)
    for (long ax = 0; ax < n; ++ax)
      for (long ay = 0; ay < n; ++ay) {
        const bool fine = ax % 5 != 0 && ay % 5 != 0;
        if (fine != (phase == 0)) continue;
        if (!visit(ax, ay)) return res;
      }
  return res;
}

}  // namespace qfalab

// Acceptance gate: one check per shipped guarantee, each printed as a single
// PASS/FAIL line with its runtime. Exits nonzero if any line fails. Runtime
// limits are part of the contract and enforced, not advisory.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qfalab/harness.hpp"
#include "qfalab/json_io.hpp"
#include "qfalab/kronpoly.hpp"
#include "qfalab/polypack.hpp"
#include "qfalab/reduction.hpp"

#ifndef QFALAB_TEST_DATA_DIR
#error "QFALAB_TEST_DATA_DIR must point at the instance corpus"
#endif

namespace {

using namespace qfalab;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void run(int number, const std::string& label, double limit_seconds,
         const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(Clock::now() - t0).count();

  std::ostringstream time_note;
  time_note.setf(std::ios::fixed);
  time_note.precision(2);
  if (limit_seconds > 0) {
    if (elapsed >= limit_seconds) {
      out.ok = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += "over the time limit";
    }
    time_note << " (" << elapsed << " s, limit " << limit_seconds << " s)";
  } else {
    time_note << " (" << elapsed << " s)";
  }

  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label;
  if (!out.detail.empty()) std::cout << " [" << out.detail << "]";
  std::cout << time_note.str() << "\n";
  if (!out.ok) ++g_failures;
}

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

Qfa rotation_qfa() {
  Qfa q;
  q.dimension = 2;
  q.projection = RatMatrix(2, 2);
  q.projection.at(0, 0) = Rational(1);
  RatMatrix x(2, 2);
  x.at(0, 0) = Rational(3, 5);
  x.at(0, 1) = Rational(-4, 5);
  x.at(1, 0) = Rational(4, 5);
  x.at(1, 1) = Rational(3, 5);
  q.generators["a"] = x;
  q.initial = {Rational(1), Rational(0)};
  return q;
}

MmpcpInstance toy_instance(bool claus) {
  MmpcpInstance inst;
  inst.sigma = {"s1", "s2"};
  inst.delta = {"d1", "d2"};
  inst.h = {{"s1", {"d1"}}, {"s2", {"d1", "d2"}}};
  inst.g = {{"s1", {"d1", "d1"}}, {"s2", {"d2"}}};
  inst.claus = claus;
  return inst;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  mpz_class m(static_cast<unsigned long>(n)), r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r.get_ui();
}

// ---- criterion bodies -------------------------------------------------

Outcome sign_identities() {
  const auto chk = verify_sign_identities(1000, 20);
  if (!chk.pass)
    return fail("counterexample " + chk.counterexample.value_or("?"));
  if (chk.samples != 1000) return fail("wrong sample count");
  return {true, "1000 random reduced words, 4 identities each"};
}

Outcome key_injectivity() {
  const auto chk = verify_top_row_uniqueness(3, 4);
  if (!chk.pass || chk.words != 120)
    return fail("enumeration failed at " + std::to_string(chk.words) + " words");

  const QuatRat ab = word_quaternion(FreeWord::parse("a b"));
  const QuatRat ba = word_quaternion(FreeWord::parse("b a"));
  const QuatRat want_ab{Rational(9, 25), Rational(12, 25), Rational(12, 25),
                        Rational(-16, 25)};
  const QuatRat want_ba{Rational(9, 25), Rational(12, 25), Rational(12, 25),
                        Rational(16, 25)};
  if (ab != want_ab || ba != want_ba) return fail("generator foil mismatch");
  return {true, "120 words over a 3-letter alphabet, keys distinct, top rows unit"};
}

Outcome freeness() {
  const auto chk = verify_freeness(10);
  if (!chk.pass) return fail("repeated product");
  if (chk.products != 2046)
    return fail("expected 2046 products, saw " + std::to_string(chk.products));
  return {true, "2046 generator products pairwise distinct"};
}

Outcome reduction_structure() {
  const auto inst = toy_instance(false);

  const RadicalQfa q8 = compile_injectivity(inst);
  if (q8.dimension != 8) return fail("injectivity dimension");
  if (!validate(q8).empty()) return fail("injectivity automaton invalid");
  if (q8.letters.size() != 2 * inst.sigma.size()) return fail("injectivity letter count");
  for (const auto& l : q8.letters) {
    const RatMatrix m = full_generator(q8, l);
    if (m.rows() != 8 || !is_orthogonal(m)) return fail("non-orthogonal 8x8 generator");
  }

  const RadicalQfa q9 = compile_ambiguity(inst);
  if (q9.dimension != 9) return fail("ambiguity dimension");
  if (!validate(q9).empty()) return fail("ambiguity automaton invalid");
  int flipped = 0;
  for (const auto& [name, b] : q9.generators) {
    if (b.corner == -1) {
      ++flipped;
      if (name != generator_name(inst.sigma.front(), Selector::H))
        return fail("flip is on the wrong generator");
    }
    const RatMatrix m = full_generator(q9, name);
    if (m.rows() != 9 || !is_orthogonal(m)) return fail("non-orthogonal 9x9 generator");
  }
  if (flipped != 1) return fail("expected exactly one flipped corner");

  for (const MmpcpInstance& ci : {toy_instance(true), [] {
         MmpcpInstance c;
         c.sigma = {"s1", "s2", "s3"};
         c.delta = {"d1", "d2", "d3"};
         c.h = {{"s1", {"d1"}}, {"s2", {"d2", "d3"}}, {"s3", {"d2", "d3"}}};
         c.g = {{"s1", {"d1", "d2"}}, {"s2", {"d3", "d2"}}, {"s3", {"d3"}}};
         c.claus = true;
         return c;
       }()}) {
    const RadicalQfa qt = claus_trim(ci);
    if (!validate(qt).empty()) return fail("trimmed automaton invalid");
    if (qt.letters.size() != 2 * ci.sigma.size() - 1) return fail("trimmed letter count");
    if (!qt.initial_transform) return fail("trimmed automaton lacks its initial transform");
  }
  return {true, "8-dim injectivity, 9-dim ambiguity, 2|S|-1 trimmed generators"};
}

Outcome end_to_end_corpus() {
  const Json manifest =
      load_json_file(std::string(QFALAB_TEST_DATA_DIR) + "/instances.json");
  std::size_t cases = 0;
  bool saw_equal_morphisms = false;
  bool saw_short_long_pair = false;
  for (const auto& c : manifest.at("cases")) {
    const std::string file = c.at("file").get<std::string>();
    const bool positive = c.at("positive").get<bool>();
    const int max_len = c.at("max_len").get<int>();
    const MmpcpInstance inst =
        instance_from_json(load_json_file(std::string(QFALAB_TEST_DATA_DIR) + "/" + file));
    if (inst.h == inst.g) saw_equal_morphisms = true;
    for (const auto& [s, img] : inst.h) {
      auto jt = inst.g.find(s);
      if (jt == inst.g.end()) continue;
      const auto& other = jt->second;
      if ((img.size() == 1 && other.size() == 2 && other[0] == img[0] &&
           other[1] == img[0]) ||
          (other.size() == 1 && img.size() == 2 && img[0] == other[0] &&
           img[1] == other[0]))
        saw_short_long_pair = true;
    }

    const EndToEndReport rep = end_to_end(inst, max_len);
    const Verdict want = positive ? Verdict::ConsistentFound : Verdict::ConsistentEmpty;
    if (rep.verdict != want) return fail(file + ": unexpected verdict");
    if (positive && !rep.transport_checked)
      return fail(file + ": transports did not both check out");
    ++cases;
  }
  if (cases < 20) return fail("corpus has fewer than 20 instances");
  if (!saw_equal_morphisms) return fail("corpus lacks an equal-morphism instance");
  if (!saw_short_long_pair) return fail("corpus lacks the one-letter/doubled-letter pair");
  return {true, std::to_string(cases) + " instances consistent, transports verified"};
}

Outcome rotation_distinctness() {
  const auto rep = collision_search(rotation_qfa(), 1000, 2000);
  if (rep.words != 1001)
    return fail("expected 1001 words, saw " + std::to_string(rep.words));
  if (!rep.pairs.empty()) return fail("acceptance values repeat");
  return {true, "1001 rotation powers, all acceptance values distinct"};
}

Outcome packing_scan() {
  const auto pack = [](const Rational& x, const Rational& y) { return pack_pair(x, y); };
  const auto res2 = injectivity_scan(pack, 2);
  if (!res2.injective || res2.pairs_scanned != 625) return fail("level-2 scan");
  const auto res3 = injectivity_scan(pack, 3);
  if (!res3.injective || res3.pairs_scanned != 15625) return fail("level-3 scan");

  const auto cres = injectivity_scan(
      [](const Rational& x, const Rational& y) { return cantor_pair(x, y); }, 2);
  if (cres.injective || !cres.collision) return fail("cantor scan found no collision");
  const auto& c = *cres.collision;
  if (c.value != Rational(297, 625) || c.x1 != Rational(2, 25) ||
      c.y1 != Rational(11, 25) || c.x2 != Rational(3, 25) || c.y2 != Rational(9, 25))
    return fail("cantor collision is not the expected one");

  for (int a = 0; a < 25; ++a)
    for (int b = 0; b < 25; ++b) {
      const Rational v = pack_pair(Rational(a, 25), Rational(b, 25));
      if (v < Rational(0) || v > Rational(9)) return fail("range bound broken");
    }
  return {true, "pack injective at levels 2 and 3, cantor collides at 297/625, |f| <= 9"};
}

Outcome lagrange_and_unit_vectors() {
  for (std::uint64_t n = 0; n <= 100000; ++n) {
    const auto a = four_square_split(n);
    if (a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3] != n)
      return fail("four-square identity fails at " + std::to_string(n));
  }
  for (std::uint64_t s = 0; s <= 100000; ++s) {
    const std::uint64_t d = square_completion(s);
    const std::uint64_t r = isqrt_u64(s + d);
    if (r * r != s + d) return fail("completion not a square at " + std::to_string(s));
    if (d > 0 && (r - 1) * (r - 1) >= s)
      return fail("completion not minimal at " + std::to_string(s));
  }

  std::mt19937_64 rng(0xacce5501ULL);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<std::uint32_t> expd(0, 3);
  std::uniform_int_distribution<std::uint64_t> coeff(1, 50);
  for (int t = 0; t < 200; ++t) {
    const int n = dim(rng);
    std::uniform_int_distribution<int> pos(1, n);
    const std::vector<EntryPos> positions{{pos(rng), pos(rng)}, {pos(rng), pos(rng)}};
    Polynomial poly;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) poly[{expd(rng), expd(rng)}] += coeff(rng);
    if (poly.count({0, 0}) && poly.size() == 1) poly[{1, 0}] = 1;
    const KronPlan plan = make_plan(n, positions, poly);
    if (plan.dense_dimension() > 4096) {
      --t;
      continue;
    }
    const InitialVector v = build_initial_vector(plan);
    Rational norm2(0);
    for (const auto& x : v.unit) norm2 += x * x;
    if (norm2 != Rational(1)) return fail("initial vector is not exactly unit");
  }
  return {true, "splits verified to 1e5, completions minimal, 200 unit vectors exact"};
}

Outcome dense_lazy_agreement() {
  std::mt19937_64 rng(0xacce5509ULL);
  std::uniform_int_distribution<int> pick_n(0, 2);
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<std::uint64_t> coeff(1, 20);
  std::uniform_int_distribution<int> wlen(0, 5);
  std::uniform_int_distribution<int> syll(1, 4);

  const auto random_gamma = [&rng, &syll]() {
    std::vector<Syllable> s;
    std::uniform_int_distribution<int> exp(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    const int n = syll(rng);
    for (int i = 0; i < n; ++i)
      s.push_back({i % 2 ? FreeLetter::B : FreeLetter::A,
                   (sign(rng) ? 1L : -1L) * exp(rng)});
    return quat_to_matrix(word_quaternion(FreeWord(std::move(s))));
  };

  int done = 0;
  while (done < 100) {
    const int n = std::array<int, 3>{1, 2, 4}[static_cast<std::size_t>(pick_n(rng))];
    std::map<std::string, RatMatrix> bases;
    if (n == 1) {
      RatMatrix plus(1, 1), minus(1, 1);
      plus.at(0, 0) = Rational(1);
      minus.at(0, 0) = Rational(-1);
      bases = {{"a", plus}, {"b", minus}};
    } else if (n == 2) {
      RatMatrix a(2, 2), b(2, 2);
      a.at(0, 0) = Rational(3, 5);
      a.at(0, 1) = Rational(-4, 5);
      a.at(1, 0) = Rational(4, 5);
      a.at(1, 1) = Rational(3, 5);
      b.at(0, 0) = Rational(5, 13);
      b.at(0, 1) = Rational(-12, 13);
      b.at(1, 0) = Rational(12, 13);
      b.at(1, 1) = Rational(5, 13);
      bases = {{"a", a}, {"b", b}};
    } else {
      bases = {{"a", random_gamma()}, {"b", random_gamma()}};
    }

    std::uniform_int_distribution<int> pos(1, n);
    const std::vector<EntryPos> positions{{pos(rng), pos(rng)}, {pos(rng), pos(rng)}};
    std::uniform_int_distribution<std::uint32_t> expd(0, n == 4 ? 2 : 4);
    Polynomial poly;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) poly[{expd(rng), expd(rng)}] += coeff(rng);
    const KronPlan plan = make_plan(n, positions, poly);
    if (plan.dense_dimension() > 4096) continue;

    const Qfa dense = build_dense(bases, plan);
    std::vector<std::string> word;
    const int len = wlen(rng);
    std::uniform_int_distribution<int> flip(0, 1);
    for (int i = 0; i < len; ++i) word.push_back(flip(rng) ? "b" : "a");

    if (acceptance(dense, word) != eval_lazy(bases, plan, word))
      return fail("dense and lazy values disagree");
    ++done;
  }
  return {true, "100 random plans agree dense vs lazy, words up to length 5"};
}

Outcome radical_magnitudes() {
  std::mt19937_64 rng(0xacce5510ULL);
  std::uniform_int_distribution<int> subset(1, 63);
  std::uniform_int_distribution<int> num(-100, 100);
  std::uniform_int_distribution<int> den(1, 100);
  const mpz_class threshold = [] {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, 10);
    return t;
  }();

  for (int t = 0; t < 1000; ++t) {
    const int mask = subset(rng);
    RadicalSignature s;
    for (int i = 0; i < 6; ++i) {
      if (!(mask & (1 << i))) continue;
      int c = num(rng);
      if (c == 0) c = 1;
      s += RadicalSignature::sqrt_term(i, Rational(c, den(rng)));
    }
    if (s.is_zero()) return fail("drew a zero signature");
    mpz_class scaled = radical_scaled(s, 30);
    if (scaled < 0) scaled = -scaled;
    if (scaled <= threshold) return fail("signature value within 1e-20 of zero");
  }
  return {true, "1000 nonzero signatures stay above 1e-20 at 30 digits"};
}

}  // namespace

int main() {
  run(1, "four sign identities of the quaternion encoding", 10, sign_identities);
  run(2, "absolute-key injectivity and unit top rows", 5, key_injectivity);
  run(3, "freeness of the generator pair", 10, freeness);
  run(4, "reduction compiler structure", 0, reduction_structure);
  run(5, "end-to-end consistency over the instance corpus", 60, end_to_end_corpus);
  run(6, "rotation automaton distinctness to length 1000", 5, rotation_distinctness);
  run(7, "packing injectivity scans and range bound", 30, packing_scan);
  run(8, "four-square splits, completions, unit vectors", 30, lagrange_and_unit_vectors);
  run(9, "dense versus lazy polynomial evaluation", 60, dense_lazy_agreement);
  run(10, "radical acceptance values stay clear of zero", 10, radical_magnitudes);

  if (g_failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}

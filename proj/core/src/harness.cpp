#include "qfalab/harness.hpp"

#include <future>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "qfalab/json_io.hpp"
#include "qfalab/reduction.hpp"

namespace qfalab {

namespace {

mpz_class words_up_to(std::size_t alphabet, int max_len) {
  mpz_class total = 0, level = 1;
  for (int l = 0; l <= max_len; ++l) {
    total += level;
    level *= static_cast<unsigned long>(alphabet);
  }
  return total;
}

void check_budget(std::size_t alphabet, int max_len, std::uint64_t budget) {
  if (max_len < 0) throw std::invalid_argument("harness: negative max_len");
  const mpz_class total = words_up_to(alphabet, max_len);
  if (total > mpz_class(static_cast<unsigned long>(budget)))
    throw std::invalid_argument("harness: " + total.get_str() +
                                " words exceed the budget of " + std::to_string(budget));
}

// Generic exhaustive search: states fold along prefixes, every word of each
// length is visited in canonical letter order, and a word whose value key was
// already seen becomes a collision pair with the key's first witness.
//
// State must be copyable; step must be pure. With jobs > 1 the per-length
// enumeration is split by first letter and the chunks are merged back in
// letter order, so the report never depends on scheduling.
template <typename State, typename StepFn, typename KeyFn>
CollisionReport run_search(std::string digest, const std::vector<std::string>& letters,
                           int max_len, std::uint64_t budget, int jobs,
                           const State& init, StepFn step, KeyFn key,
                           bool quarter_basis) {
  check_budget(letters.size(), max_len, budget);

  CollisionReport rep;
  rep.digest = std::move(digest);
  rep.max_len = max_len;
  rep.quarter_basis = quarter_basis;

  std::map<std::string, std::vector<std::string>> first_witness;
  std::vector<std::string> word_buf;

  auto refold = [&](const std::vector<std::string>& word) {
    State s = init;
    for (const auto& l : word) s = step(s, l);
    return key(s);
  };

  // Pairs are emitted only after both values are recomputed from scratch;
  // the incremental fold above shares prefixes, the recheck does not.
  auto process = [&](const std::vector<std::string>& word, std::string&& value) {
    ++rep.words;
    auto [it, fresh] = first_witness.emplace(std::move(value), word);
    if (!fresh) {
      if (refold(it->second) != it->first || refold(word) != it->first)
        throw std::logic_error("harness: collision pair failed re-verification");
      rep.pairs.push_back({it->second, word, it->first});
    }
  };

  // A one-letter alphabet has one word per length; restarting the fold for
  // every length would cost max_len^2 steps, so extend a single state.
  if (letters.size() == 1) {
    process({}, key(init));
    State s = init;
    for (int len = 1; len <= max_len; ++len) {
      s = step(s, letters.front());
      word_buf.push_back(letters.front());
      process(word_buf, key(s));
    }
    return rep;
  }

  using Chunk = std::vector<std::pair<std::vector<std::string>, std::string>>;
  auto collect = [&](const State& state, int remaining, std::vector<std::string>& prefix,
                     Chunk& out, auto&& self) -> void {
    if (remaining == 0) {
      out.emplace_back(prefix, key(state));
      return;
    }
    for (const auto& l : letters) {
      prefix.push_back(l);
      self(step(state, l), remaining - 1, prefix, out, self);
      prefix.pop_back();
    }
  };

  auto walk = [&](const State& state, int remaining, auto&& self) -> void {
    if (remaining == 0) {
      process(word_buf, key(state));
      return;
    }
    for (const auto& l : letters) {
      word_buf.push_back(l);
      self(step(state, l), remaining - 1, self);
      word_buf.pop_back();
    }
  };

  process({}, key(init));
  for (int len = 1; len <= max_len; ++len) {
    const bool parallel = jobs > 1 && letters.size() > 1;
    if (!parallel) {
      word_buf.clear();
      walk(init, len, walk);
      continue;
    }
    // Letter-indexed chunks, evaluated in bounded batches, merged in order.
    for (std::size_t base = 0; base < letters.size();
         base += static_cast<std::size_t>(jobs)) {
      const std::size_t stop = std::min(letters.size(), base + static_cast<std::size_t>(jobs));
      std::vector<std::future<Chunk>> futs;
      for (std::size_t i = base; i < stop; ++i) {
        futs.push_back(std::async(std::launch::async, [&, i]() {
          Chunk out;
          std::vector<std::string> prefix{letters[i]};
          collect(step(init, letters[i]), len - 1, prefix, out, collect);
          return out;
        }));
      }
      for (auto& f : futs)
        for (auto& [word, value] : f.get()) process(word, std::move(value));
    }
  }
  return rep;
}

struct RadState {
  RatMatrix yl, yr;
};

}  // namespace

CollisionReport collision_search(const RadicalQfa& q, int max_len, std::uint64_t budget,
                                 int jobs) {
  {
    const auto bad = validate(q);
    if (!bad.empty()) throw std::invalid_argument("harness: invalid automaton: " + bad.front());
  }
  RadState init{q.initial_transform ? q.initial_transform->left : RatMatrix::identity(4),
                q.initial_transform ? q.initial_transform->right : RatMatrix::identity(4)};
  auto step = [&q](const RadState& s, const std::string& letter) {
    const auto& b = q.generators.at(letter);
    return RadState{b.left * s.yl, b.right * s.yr};
  };
  auto key = [&q](const RadState& s) {
    return canonical_dump_compact(to_json(signature_from_blocks(q, s.yl, s.yr)));
  };
  return run_search(automaton_digest(q), q.letters, max_len, budget, jobs, init, step, key,
                    q.trimmed);
}

CollisionReport collision_search(const Qfa& q, int max_len, std::uint64_t budget, int jobs) {
  {
    const auto bad = validate(q);
    if (!bad.empty()) throw std::invalid_argument("harness: invalid automaton: " + bad.front());
  }
  std::vector<std::string> letters;
  letters.reserve(q.generators.size());
  for (const auto& [name, m] : q.generators) {
    (void)m;
    letters.push_back(name);
  }
  using VecState = std::vector<Rational>;
  auto step = [&q](const VecState& v, const std::string& letter) {
    return q.generators.at(letter).apply(v);
  };
  auto key = [&q](const VecState& v) {
    Rational acc(0);
    for (const auto& x : q.projection.apply(v)) acc += x * x;
    return acc.str();
  };
  return run_search(automaton_digest(q), letters, max_len, budget, jobs, q.initial, step,
                    key, false);
}

IdentityCheck verify_sign_identities(int sample_count, int max_syllables,
                                     std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("harness: need at least one sample");
  if (max_syllables < 1) throw std::invalid_argument("harness: need at least one syllable");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_count(1, max_syllables);
  std::uniform_int_distribution<int> pick_exp(1, 6);
  std::uniform_int_distribution<int> pick_bit(0, 1);

  IdentityCheck chk;
  for (int i = 0; i < sample_count; ++i) {
    const int count = pick_count(rng);
    std::vector<Syllable> raw;
    raw.reserve(static_cast<std::size_t>(count));
    FreeLetter base = pick_bit(rng) ? FreeLetter::A : FreeLetter::B;
    for (int k = 0; k < count; ++k) {
      const long e = static_cast<long>(pick_exp(rng)) * (pick_bit(rng) ? 1 : -1);
      raw.push_back({base, e});
      base = base == FreeLetter::A ? FreeLetter::B : FreeLetter::A;
    }
    const FreeWord w(raw);
    chk.samples = i + 1;

    const QuatRat q = word_quaternion(w);
    const bool ok =
        word_quaternion(w.reversed()) == QuatRat{q.r, q.x, q.y, -q.z} &&
        word_quaternion(w.negate_a()) == QuatRat{q.r, -q.x, q.y, -q.z} &&
        word_quaternion(w.negate_b()) == QuatRat{q.r, q.x, -q.y, -q.z} &&
        word_quaternion(w.negate_both()) == QuatRat{q.r, -q.x, -q.y, q.z};
    if (!ok) {
      chk.pass = false;
      chk.counterexample = w.str();
      return chk;
    }
  }
  return chk;
}

UniquenessCheck verify_top_row_uniqueness(int n, int max_len) {
  if (n < 1 || max_len < 1) throw std::invalid_argument("harness: bad enumeration bounds");
  if (words_up_to(static_cast<std::size_t>(n), max_len) - 1 > 100000)
    throw std::invalid_argument("harness: uniqueness enumeration above 10^5 words");

  UniquenessCheck chk;
  std::map<std::string, std::vector<int>> seen;
  for (int len = 1; len <= max_len && chk.pass; ++len) {
    std::vector<int> word(static_cast<std::size_t>(len), 1);
    while (true) {
      ++chk.words;
      const RatMatrix m = word_matrix(word);
      Rational norm(0);
      for (int j = 0; j < 4; ++j) norm += m.at(0, j) * m.at(0, j);
      if (norm != Rational(1)) {
        // A word failing its own unit identity is reported against itself.
        chk.pass = false;
        chk.colliding = {word, word};
        break;
      }
      const auto k = abs_key(m);
      const std::string key = k[0].str() + "|" + k[1].str() + "|" + k[2].str();
      auto [it, fresh] = seen.emplace(key, word);
      if (!fresh) {
        chk.pass = false;
        chk.colliding = {it->second, word};
        break;
      }

      int p = len - 1;
      while (p >= 0 && word[static_cast<std::size_t>(p)] == n) {
        word[static_cast<std::size_t>(p)] = 1;
        --p;
      }
      if (p < 0) break;
      ++word[static_cast<std::size_t>(p)];
    }
  }
  return chk;
}

FreenessCheck verify_freeness(int max_len) {
  if (max_len < 1 || max_len > 19)
    throw std::invalid_argument("harness: freeness length out of range");
  FreenessCheck chk;
  std::set<std::string> seen;
  const RatMatrix gen_a = quat_to_matrix(quat_gen_a());
  const RatMatrix gen_b = quat_to_matrix(quat_gen_b());
  auto dfs = [&](const RatMatrix& prod, int remaining, auto&& self) -> void {
    if (!chk.pass) return;
    ++chk.products;
    if (!seen.insert(prod.key()).second) {
      chk.pass = false;
      return;
    }
    if (remaining == 0) return;
    self(gen_a * prod, remaining - 1, self);
    self(gen_b * prod, remaining - 1, self);
  };
  dfs(gen_a, max_len - 1, dfs);
  dfs(gen_b, max_len - 1, dfs);
  return chk;
}

std::pair<std::vector<std::string>, std::vector<std::string>> transport_solution(
    const MixedSolution& sol) {
  std::vector<std::string> w1, w2;
  w1.reserve(sol.word.size());
  w2.reserve(sol.word.size());
  for (std::size_t i = sol.word.size(); i-- > 0;) {
    w1.push_back(generator_name(sol.word[i], sol.sel_a[i]));
    w2.push_back(generator_name(sol.word[i], sol.sel_b[i]));
  }
  return {w1, w2};
}

namespace {

std::optional<std::pair<std::string, Selector>> parse_generator_name(const std::string& n) {
  if (n.size() < 5 || n.rfind("L:", 0) != 0) return std::nullopt;
  const auto last = n.rfind(':');
  if (last <= 1) return std::nullopt;
  const std::string sel = n.substr(last + 1);
  Selector s;
  if (sel == "H") s = Selector::H;
  else if (sel == "G") s = Selector::G;
  else return std::nullopt;
  return std::make_pair(n.substr(2, last - 2), s);
}

}  // namespace

std::optional<MixedSolution> transport_collision_pair(
    const std::vector<std::string>& word1, const std::vector<std::string>& word2) {
  if (word1.size() != word2.size() || word1.empty()) return std::nullopt;
  MixedSolution sol;
  const std::size_t k = word1.size();
  sol.word.resize(k);
  sol.sel_a.resize(k);
  sol.sel_b.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = parse_generator_name(word1[k - 1 - i]);
    const auto b = parse_generator_name(word2[k - 1 - i]);
    if (!a || !b || a->first != b->first) return std::nullopt;
    sol.word[i] = a->first;
    sol.sel_a[i] = a->second;
    sol.sel_b[i] = b->second;
  }
  return sol;
}

EndToEndReport end_to_end(const MmpcpInstance& inst, int max_len, std::uint64_t budget,
                          int jobs) {
  EndToEndReport rep;
  rep.solution = brute_search(inst, max_len, std::max(max_len, 8));
  const RadicalQfa q = compile_injectivity(inst);
  rep.collisions = collision_search(q, max_len, budget, jobs);

  bool transports_ok = true;
  bool any_transport = false;
  if (rep.solution) {
    any_transport = true;
    const auto [w1, w2] = transport_solution(*rep.solution);
    transports_ok = acceptance_signature(q, w1) == acceptance_signature(q, w2);
  }
  if (transports_ok && !rep.collisions.pairs.empty()) {
    any_transport = true;
    const auto& p = rep.collisions.pairs.front();
    const auto back = transport_collision_pair(p.word1, p.word2);
    transports_ok = back.has_value() && check_solution(inst, *back);
  }
  rep.transport_checked = any_transport && transports_ok;

  const bool found_sol = rep.solution.has_value();
  const bool found_col = !rep.collisions.pairs.empty();
  if (!transports_ok || found_sol != found_col)
    rep.verdict = Verdict::Inconsistent;
  else
    rep.verdict = found_sol ? Verdict::ConsistentFound : Verdict::ConsistentEmpty;
  return rep;
}

}  // namespace qfalab

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfalab/harness.hpp"
#include "qfalab/json_io.hpp"
#include "qfalab/kronpoly.hpp"
#include "qfalab/polypack.hpp"
#include "qfalab/reduction.hpp"

namespace {

using namespace qfalab;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << canonical_dump(j) << "\n";
  else
    write_json_file(out_path, j);
}

std::uint64_t resolve_budget(const std::string& flag_text) {
  std::string text = flag_text;
  if (text.empty())
    if (const char* env = std::getenv("QFALAB_BUDGET")) text = env;
  if (text.empty()) return kDefaultBudget;
  if (text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("budget: not a nonnegative integer: " + text);
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("budget: out of range: " + text);
  }
}

struct LoadedAutomaton {
  std::optional<RadicalQfa> radical;
  std::optional<Qfa> plain;
};

LoadedAutomaton load_automaton(const std::string& path) {
  const Json j = load_json_file(path);
  LoadedAutomaton out;
  if (j.is_object() && j.contains("kind") && j.at("kind") == "radical") {
    out.radical = radical_qfa_from_json(j);
    const auto bad = validate(*out.radical);
    if (!bad.empty()) throw std::invalid_argument("automaton: " + bad.front());
  } else {
    out.plain = qfa_from_json(j);
    const auto bad = validate(*out.plain);
    if (!bad.empty()) throw std::invalid_argument("automaton: " + bad.front());
  }
  return out;
}

std::string rational_decimal(const Rational& q, int digits) {
  return radical_to_decimal(RadicalSignature::from_rational(q), digits);
}

// Adds a decimal companion to each collision pair; the exact value string
// stays untouched.
void attach_pair_decimals(Json& report, bool radical, int digits) {
  for (auto& p : report.at("pairs")) {
    const std::string value = p.at("value").get<std::string>();
    if (radical)
      p["value_decimal"] = radical_to_decimal(signature_from_json(Json::parse(value)), digits);
    else
      p["value_decimal"] = rational_decimal(Rational::from_string(value), digits);
  }
}

Json uniqueness_json(const UniquenessCheck& chk) {
  Json j;
  j["pass"] = chk.pass;
  j["words"] = chk.words;
  if (chk.colliding)
    j["colliding"] = Json::array({chk.colliding->first, chk.colliding->second});
  else
    j["colliding"] = nullptr;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for word-to-matrix encodings"};
  app.require_subcommand(1);

  std::string in_path, out_path, qfa_path, word_text, budget_text;
  int max_len = 4, jobs = 1, float_digits = 0, kmax = 2, cap = 8;
  std::uint64_t n_value = 0;
  bool cantor = false;
  int samples = 1000, max_syllables = 20, uniq_n = 3, uniq_len = 4, free_len = 10;
  std::uint64_t seed = 0x51f0ab1eULL;

  auto* compile = app.add_subcommand("compile", "instance -> injectivity automaton");
  compile->add_option("--in", in_path, "instance JSON")->required();
  compile->add_option("--out", out_path, "output file (default stdout)");

  auto* compile_amb =
      app.add_subcommand("compile-ambiguity", "instance -> ambiguity automaton");
  compile_amb->add_option("--in", in_path, "instance JSON")->required();
  compile_amb->add_option("--out", out_path, "output file (default stdout)");

  auto* trim = app.add_subcommand("trim", "claus instance -> trimmed automaton");
  trim->add_option("--in", in_path, "instance JSON")->required();
  trim->add_option("--out", out_path, "output file (default stdout)");

  auto* accept = app.add_subcommand("accept", "acceptance value of one word");
  accept->add_option("--qfa", qfa_path, "automaton JSON")->required();
  accept->add_option("--word", word_text, "space-separated letters, empty for the empty word")
      ->required();
  accept->add_option("--float", float_digits, "add a decimal companion at this many digits")
      ->check(CLI::Range(1, 50));

  auto* collide = app.add_subcommand("collide", "exhaustive equal-acceptance search");
  collide->add_option("--qfa", qfa_path, "automaton JSON")->required();
  collide->add_option("--max-len", max_len, "word length bound")->required();
  collide->add_option("--jobs", jobs, "parallel subtree workers")->check(CLI::Range(1, 64));
  collide->add_option("--budget", budget_text, "word budget (overrides QFALAB_BUDGET)");
  collide->add_option("--float", float_digits, "decimal companion per pair")
      ->check(CLI::Range(1, 50));
  collide->add_option("--out", out_path, "output file (default stdout)");

  auto* solve = app.add_subcommand("mmpcp-solve", "bounded mixed-solution search");
  solve->add_option("--in", in_path, "instance JSON")->required();
  solve->add_option("--max-len", max_len, "word length bound")->required();
  solve->add_option("--cap", cap, "hard length cap")->check(CLI::Range(1, 16));

  auto* e2e = app.add_subcommand("end-to-end", "solver vs compiled collision search");
  e2e->add_option("--in", in_path, "instance JSON")->required();
  e2e->add_option("--max-len", max_len, "word length bound")->required();
  e2e->add_option("--jobs", jobs, "parallel subtree workers")->check(CLI::Range(1, 64));
  e2e->add_option("--budget", budget_text, "word budget (overrides QFALAB_BUDGET)");
  e2e->add_option("--out", out_path, "output file (default stdout)");

  auto* polycheck = app.add_subcommand("polycheck", "packing injectivity scan");
  polycheck->add_option("--kmax", kmax, "pentadic grid level")->check(CLI::Range(0, 3));
  polycheck->add_flag("--cantor", cantor, "scan the Cantor pairing instead");

  auto* foursquares = app.add_subcommand("foursquares", "four-square witness of n");
  foursquares->add_option("--n", n_value, "nonnegative integer")->required();

  int kron_len = 2;
  auto* kron = app.add_subcommand("kron-demo", "dense vs lazy polynomial evaluation");
  kron->add_option("--max-len", kron_len, "check all words up to this length")
      ->check(CLI::Range(0, 6));
  kron->add_option("--float", float_digits, "decimal companion per case")
      ->check(CLI::Range(1, 50));

  auto* lemmas = app.add_subcommand("verify-lemmas", "randomized and exhaustive suites");
  lemmas->add_option("--samples", samples, "identity sample count");
  lemmas->add_option("--max-syllables", max_syllables, "syllable bound per sample");
  lemmas->add_option("--uniq-n", uniq_n, "uniqueness alphabet size");
  lemmas->add_option("--uniq-len", uniq_len, "uniqueness length bound");
  lemmas->add_option("--free-len", free_len, "freeness length bound");
  lemmas->add_option("--seed", seed, "identity suite seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*compile || *compile_amb || *trim) {
      const MmpcpInstance inst = instance_from_json(load_json_file(in_path));
      RadicalQfa q;
      if (*compile) q = compile_injectivity(inst);
      if (*compile_amb) q = compile_ambiguity(inst);
      if (*trim) q = claus_trim(inst);
      emit(to_json(q), out_path);
      return 0;
    }

    if (*accept) {
      const auto aut = load_automaton(qfa_path);
      const auto word = split_word(word_text);
      Json j;
      j["word"] = join_word(word);
      if (aut.radical) {
        const RadicalSignature sig = acceptance_signature(*aut.radical, word);
        j["digest"] = automaton_digest(*aut.radical);
        j["signature"] = to_json(sig);
        if (float_digits > 0) j["decimal"] = radical_to_decimal(sig, float_digits);
      } else {
        const Rational value = acceptance(*aut.plain, word);
        j["digest"] = automaton_digest(*aut.plain);
        j["value"] = value.str();
        if (float_digits > 0) j["decimal"] = rational_decimal(value, float_digits);
      }
      emit(j, "");
      return 0;
    }

    if (*collide) {
      const auto aut = load_automaton(qfa_path);
      const std::uint64_t budget = resolve_budget(budget_text);
      const CollisionReport rep = aut.radical
                                      ? collision_search(*aut.radical, max_len, budget, jobs)
                                      : collision_search(*aut.plain, max_len, budget, jobs);
      Json j = to_json(rep);
      if (float_digits > 0) attach_pair_decimals(j, aut.radical.has_value(), float_digits);
      emit(j, out_path);
      return rep.pairs.empty() ? 0 : 2;
    }

    if (*solve) {
      const MmpcpInstance inst = instance_from_json(load_json_file(in_path));
      const auto sol = brute_search(inst, max_len, cap);
      Json j;
      j["digest"] = fnv1a64_hex(canonical_dump_compact(to_json(inst)));
      j["max_len"] = max_len;
      j["solution"] = sol ? to_json(*sol) : Json(nullptr);
      emit(j, "");
      return 0;
    }

    if (*e2e) {
      const MmpcpInstance inst = instance_from_json(load_json_file(in_path));
      const EndToEndReport rep = end_to_end(inst, max_len, resolve_budget(budget_text), jobs);
      emit(to_json(rep), out_path);
      return rep.verdict == Verdict::Inconsistent ? 3 : 0;
    }

    if (*polycheck) {
      ScanResult res;
      if (cantor)
        res = injectivity_scan(
            [](const Rational& x, const Rational& y) { return cantor_pair(x, y); }, kmax);
      else
        res = injectivity_scan(
            [](const Rational& x, const Rational& y) { return pack_pair(x, y); }, kmax);
      Json j = to_json(res);
      j["kmax"] = kmax;
      j["function"] = cantor ? "cantor" : "pack-pair";
      emit(j, "");
      return res.injective ? 0 : 2;
    }

    if (*foursquares) {
      const auto split = four_square_split(n_value);
      Json j;
      j["n"] = n_value;
      j["split"] = split;
      emit(j, "");
      return 0;
    }

    if (*kron) {
      std::map<std::string, RatMatrix> bases;
      bases.emplace("a", quat_to_matrix(quat_gen_a()));
      bases.emplace("b", quat_to_matrix(quat_gen_b()));
      Polynomial poly;
      poly[{2, 1}] = 1;
      poly[{0, 0}] = 3;
      const KronPlan plan = make_plan(4, {{1, 1}, {1, 2}}, poly);
      const Qfa dense = build_dense(bases, plan);

      Json cases = Json::array();
      bool agree = true;
      std::vector<std::vector<std::string>> words{{}};
      for (std::size_t from = 0, stop = words.size(); static_cast<int>(words[from].size()) < kron_len;
           from = stop, stop = words.size())
        for (std::size_t i = from; i < stop; ++i)
          for (const char* l : {"a", "b"}) {
            auto e = words[i];
            e.emplace_back(l);
            words.push_back(std::move(e));
          }
      for (const auto& w : words) {
        const Rational direct = acceptance(dense, w);
        const Rational lazy = eval_lazy(bases, plan, w);
        agree = agree && direct == lazy;
        Json c;
        c["word"] = join_word(w);
        c["value"] = lazy.str();
        if (float_digits > 0) c["decimal"] = rational_decimal(lazy, float_digits);
        cases.push_back(c);
      }
      Json j;
      j["plan"] = to_json(plan);
      j["dense_dimension"] = plan.dense_dimension().get_str();
      j["cases"] = cases;
      j["agree"] = agree;
      emit(j, "");
      return agree ? 0 : 3;
    }

    if (*lemmas) {
      const IdentityCheck idc = verify_sign_identities(samples, max_syllables, seed);
      const UniquenessCheck uniq = verify_top_row_uniqueness(uniq_n, uniq_len);
      const FreenessCheck fre = verify_freeness(free_len);
      Json j;
      j["identities"] = to_json(idc);
      j["uniqueness"] = uniqueness_json(uniq);
      j["freeness"] = Json{{"pass", fre.pass}, {"products", fre.products}};
      emit(j, "");
      return idc.pass && uniq.pass && fre.pass ? 0 : 3;
    }
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}

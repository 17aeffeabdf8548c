#include "qfalab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qfalab {

namespace {

// Structurally bad input files are parse failures, not domain errors; the
// prefix is what the CLI keys its exit code off.
[[noreturn]] void shape_error(const std::string& what) {
  throw std::runtime_error("parse: " + what);
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Rational::from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      shape_error(e.what());
    }
  }
  shape_error("rational must be a string or integer");
}

Json to_json(const RadicalSignature& s) {
  Json arr = Json::array();
  for (const auto& [e, c] : s.terms()) {
    Json term;
    term["coeff"] = to_json(c);
    term["exponents"] = e;
    arr.push_back(std::move(term));
  }
  return arr;
}

RadicalSignature signature_from_json(const Json& j) {
  RadicalSignature s;
  for (const auto& term : j) {
    RadExp e{};
    const auto& exps = term.at("exponents");
    if (exps.size() != e.size()) shape_error("signature exponent vector must have 6 slots");
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = exps.at(i).get<std::uint8_t>();
    s.add_term(e, rational_from_json(term.at("coeff")));
  }
  return s;
}

Json to_json(const RatMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m.at(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

RatMatrix matrix_from_json(const Json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  RatMatrix m(rows, cols);
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) shape_error("matrix row count mismatch");
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries.at(static_cast<std::size_t>(i));
    if (static_cast<int>(row.size()) != cols) shape_error("matrix column count mismatch");
    for (int k = 0; k < cols; ++k)
      m.at(i, k) = rational_from_json(row.at(static_cast<std::size_t>(k)));
  }
  return m;
}

Json to_json(const Qfa& q) {
  Json j;
  j["dimension"] = q.dimension;
  j["projection"] = to_json(q.projection);
  Json gens;
  for (const auto& [name, m] : q.generators) gens[name] = to_json(m);
  j["generators"] = std::move(gens);
  Json init = Json::array();
  for (const auto& x : q.initial) init.push_back(to_json(x));
  j["initial"] = std::move(init);
  return j;
}

Qfa qfa_from_json(const Json& j) {
  Qfa q;
  q.dimension = j.at("dimension").get<int>();
  q.projection = matrix_from_json(j.at("projection"));
  for (const auto& [name, m] : j.at("generators").items())
    q.generators.emplace(name, matrix_from_json(m));
  for (const auto& x : j.at("initial")) q.initial.push_back(rational_from_json(x));
  return q;
}

namespace {

Json blocks_to_json(const RadicalBlocks& b, bool with_corner) {
  Json j;
  j["left"] = to_json(b.left);
  j["right"] = to_json(b.right);
  if (with_corner) j["corner"] = b.corner;
  return j;
}

RadicalBlocks blocks_from_json(const Json& j, bool with_corner) {
  RadicalBlocks b;
  b.left = matrix_from_json(j.at("left"));
  b.right = matrix_from_json(j.at("right"));
  if (with_corner) b.corner = j.at("corner").get<int>();
  return b;
}

}  // namespace

Json to_json(const RadicalQfa& q) {
  Json j;
  j["kind"] = "radical";
  j["dimension"] = q.dimension;
  j["ambiguity"] = q.ambiguity_extended;
  j["trimmed"] = q.trimmed;
  j["letters"] = q.letters;
  Json blocks;
  for (const auto& [name, b] : q.generators)
    blocks[name] = blocks_to_json(b, q.ambiguity_extended);
  j["blocks"] = std::move(blocks);
  if (q.initial_transform)
    j["initial_transform"] = blocks_to_json(*q.initial_transform, false);
  return j;
}

RadicalQfa radical_qfa_from_json(const Json& j) {
  if (j.at("kind").get<std::string>() != "radical") shape_error("expected kind \"radical\"");
  RadicalQfa q;
  q.dimension = j.at("dimension").get<int>();
  q.ambiguity_extended = j.at("ambiguity").get<bool>();
  q.trimmed = j.at("trimmed").get<bool>();
  q.letters = j.at("letters").get<std::vector<std::string>>();
  for (const auto& [name, b] : j.at("blocks").items())
    q.generators.emplace(name, blocks_from_json(b, q.ambiguity_extended));
  if (j.contains("initial_transform"))
    q.initial_transform = blocks_from_json(j.at("initial_transform"), false);
  return q;
}

Json to_json(const MmpcpInstance& inst) {
  Json j;
  j["sigma"] = inst.sigma;
  j["delta"] = inst.delta;
  Json h, g;
  for (const auto& [s, img] : inst.h) h[s] = join_word(img);
  for (const auto& [s, img] : inst.g) g[s] = join_word(img);
  j["h"] = std::move(h);
  j["g"] = std::move(g);
  j["claus"] = inst.claus;
  return j;
}

MmpcpInstance instance_from_json(const Json& j) {
  MmpcpInstance inst;
  inst.sigma = j.at("sigma").get<std::vector<std::string>>();
  inst.delta = j.at("delta").get<std::vector<std::string>>();
  for (const auto& [s, img] : j.at("h").items())
    inst.h.emplace(s, split_word(img.get<std::string>()));
  for (const auto& [s, img] : j.at("g").items())
    inst.g.emplace(s, split_word(img.get<std::string>()));
  inst.claus = j.value("claus", false);
  return inst;
}

Json to_json(const MixedSolution& sol) {
  Json j;
  j["word"] = join_word(sol.word);
  j["selA"] = selectors_str(sol.sel_a);
  j["selB"] = selectors_str(sol.sel_b);
  return j;
}

MixedSolution solution_from_json(const Json& j) {
  MixedSolution sol;
  sol.word = split_word(j.at("word").get<std::string>());
  sol.sel_a = parse_selectors(j.at("selA").get<std::string>());
  sol.sel_b = parse_selectors(j.at("selB").get<std::string>());
  return sol;
}

Json to_json(const KronPlan& plan) {
  Json j;
  j["n"] = plan.n;
  Json pos = Json::array();
  for (const auto& p : plan.positions) pos.push_back(Json::array({p.row, p.col}));
  j["positions"] = std::move(pos);
  Json terms = Json::array();
  for (const auto& t : plan.terms) {
    Json term;
    term["coeff"] = t.coeff;
    term["exponents"] = t.exps;
    term["split"] = t.split;
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  j["weight"] = plan.weight;
  j["delta"] = plan.delta;
  j["delta_split"] = plan.delta_split;
  return j;
}

KronPlan plan_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<EntryPos> positions;
  for (const auto& p : j.at("positions"))
    positions.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  Polynomial poly;
  for (const auto& term : j.at("terms")) {
    const Monomial exps = term.at("exponents").get<Monomial>();
    poly[exps] += term.at("coeff").get<std::uint64_t>();
  }
  KronPlan plan = make_plan(n, positions, poly);
  // Stored derived fields are advisory; they must agree with the rebuild.
  if (j.contains("weight") && j.at("weight").get<std::uint64_t>() != plan.weight)
    shape_error("plan weight does not match its terms");
  if (j.contains("delta") && j.at("delta").get<std::uint64_t>() != plan.delta)
    shape_error("plan delta does not match its weight");
  return plan;
}

Json to_json(const CollisionReport& rep) {
  Json j;
  j["digest"] = rep.digest;
  j["max_len"] = rep.max_len;
  j["words"] = rep.words;
  j["quarter_basis"] = rep.quarter_basis;
  Json pairs = Json::array();
  for (const auto& p : rep.pairs) {
    Json pj;
    pj["word1"] = join_word(p.word1);
    pj["word2"] = join_word(p.word2);
    pj["value"] = p.value;
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json to_json(const EndToEndReport& rep) {
  Json j;
  switch (rep.verdict) {
    case Verdict::ConsistentFound: j["verdict"] = "consistent-found"; break;
    case Verdict::ConsistentEmpty: j["verdict"] = "consistent-empty"; break;
    case Verdict::Inconsistent: j["verdict"] = "inconsistent"; break;
  }
  j["solution"] = rep.solution ? to_json(*rep.solution) : Json(nullptr);
  j["collisions"] = to_json(rep.collisions);
  j["transport_checked"] = rep.transport_checked;
  return j;
}

Json to_json(const ScanResult& res) {
  Json j;
  j["status"] = res.injective ? "injective" : "collision";
  j["pairs_scanned"] = res.pairs_scanned;
  if (res.collision) {
    Json c;
    c["x1"] = to_json(res.collision->x1);
    c["y1"] = to_json(res.collision->y1);
    c["x2"] = to_json(res.collision->x2);
    c["y2"] = to_json(res.collision->y2);
    c["value"] = to_json(res.collision->value);
    j["collision"] = std::move(c);
  }
  return j;
}

Json to_json(const IdentityCheck& chk) {
  Json j;
  j["pass"] = chk.pass;
  j["samples"] = chk.samples;
  j["counterexample"] = chk.counterexample ? Json(*chk.counterexample) : Json(nullptr);
  return j;
}

std::string join_word(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

std::vector<std::string> split_word(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string selectors_str(const std::vector<Selector>& row) {
  std::string out;
  for (Selector s : row) {
    if (!out.empty()) out += ' ';
    out += selector_char(s);
  }
  return out;
}

std::vector<Selector> parse_selectors(const std::string& text) {
  std::vector<Selector> out;
  for (const auto& tok : split_word(text)) {
    if (tok == "H") out.push_back(Selector::H);
    else if (tok == "G") out.push_back(Selector::G);
    else throw std::invalid_argument("selector row: bad token \"" + tok + "\"");
  }
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2); }

std::string canonical_dump_compact(const Json& j) { return j.dump(); }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string automaton_digest(const RadicalQfa& q) {
  return fnv1a64_hex(canonical_dump(to_json(q)));
}

std::string automaton_digest(const Qfa& q) {
  return fnv1a64_hex(canonical_dump(to_json(q)));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("io: cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("parse: " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("io: cannot open " + path + " for writing");
  out << canonical_dump(j) << '\n';
  if (!out) throw std::runtime_error("io: write to " + path + " failed");
}

}  // namespace qfalab

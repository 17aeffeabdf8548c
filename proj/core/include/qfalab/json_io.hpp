#pragma once

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include <string>
#include <vector>

#include "qfalab/harness.hpp"
#include "qfalab/kronpoly.hpp"
#include "qfalab/mmpcp.hpp"
#include "qfalab/polypack.hpp"
#include "qfalab/qfa.hpp"
#include "qfalab/radical.hpp"

namespace qfalab {

using Json = nlohmann::json;

// All serialization is canonical: object keys sorted (nlohmann's default map
// keeps them that way), rationals always as "num/den" strings, words and
// selector rows as space-joined strings. parse(write(x)) re-serializes to the
// identical bytes.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);  // accepts "n/d", "n", or integer

Json to_json(const RadicalSignature& s);
RadicalSignature signature_from_json(const Json& j);

Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json to_json(const Qfa& q);
Qfa qfa_from_json(const Json& j);

Json to_json(const RadicalQfa& q);
RadicalQfa radical_qfa_from_json(const Json& j);

Json to_json(const MmpcpInstance& inst);
MmpcpInstance instance_from_json(const Json& j);

Json to_json(const MixedSolution& sol);
MixedSolution solution_from_json(const Json& j);

Json to_json(const KronPlan& plan);
KronPlan plan_from_json(const Json& j);  // revalidates against a rebuilt plan

Json to_json(const CollisionReport& rep);
Json to_json(const EndToEndReport& rep);
Json to_json(const ScanResult& res);
Json to_json(const IdentityCheck& chk);

// Word and selector-row text forms used inside the JSON.
std::string join_word(const std::vector<std::string>& w);
std::vector<std::string> split_word(const std::string& text);
std::string selectors_str(const std::vector<Selector>& row);
std::vector<Selector> parse_selectors(const std::string& text);

std::string canonical_dump(const Json& j);          // 2-space indent, no trailing newline
std::string canonical_dump_compact(const Json& j);  // single line

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

// Digest of the automaton's canonical JSON; what collision reports carry.
std::string automaton_digest(const RadicalQfa& q);
std::string automaton_digest(const Qfa& q);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace qfalab

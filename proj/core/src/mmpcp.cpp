#include "qfalab/mmpcp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qfalab {

namespace {

bool sane_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ':' || c == ' ' || c == '\t' || c == '\n') return false;
  return true;
}

void check_morphism(const MmpcpInstance& inst,
                    const std::map<std::string, std::vector<std::string>>& f,
                    const char* name, std::vector<std::string>& bad) {
  const std::set<std::string> delta(inst.delta.begin(), inst.delta.end());
  for (const auto& s : inst.sigma) {
    auto it = f.find(s);
    if (it == f.end()) {
      bad.push_back(std::string(name) + " is not defined on " + s);
      continue;
    }
    for (const auto& d : it->second)
      if (!delta.count(d))
        bad.push_back(std::string(name) + "(" + s + ") uses non-target letter " + d);
  }
  for (const auto& [s, img] : f) {
    (void)img;
    if (std::find(inst.sigma.begin(), inst.sigma.end(), s) == inst.sigma.end())
      bad.push_back(std::string(name) + " is defined on unknown letter " + s);
  }
}

int selector_rank(Selector s) { return s == Selector::H ? 0 : 1; }

bool selectors_less(const std::vector<Selector>& a, const std::vector<Selector>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](Selector x, Selector y) { return selector_rank(x) < selector_rank(y); });
}

// One side of the growing mixed equation, as a flat sequence of target letters.
using Flat = std::vector<std::string>;

bool prefix_compatible(const Flat& a, const Flat& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

std::vector<std::string> validate(const MmpcpInstance& inst) {
  std::vector<std::string> bad;
  std::set<std::string> seen;
  for (const auto& s : inst.sigma) {
    if (!sane_name(s)) bad.push_back("bad source letter name \"" + s + "\"");
    if (!seen.insert(s).second) bad.push_back("duplicate letter " + s);
  }
  for (const auto& d : inst.delta) {
    if (!sane_name(d)) bad.push_back("bad target letter name \"" + d + "\"");
    if (!seen.insert(d).second)
      bad.push_back("letter " + d + " appears twice or crosses the alphabets");
  }
  check_morphism(inst, inst.h, "h", bad);
  check_morphism(inst, inst.g, "g", bad);
  return bad;
}

bool check_solution(const MmpcpInstance& inst, const MixedSolution& sol) {
  if (sol.word.empty()) throw std::invalid_argument("mmpcp: empty solution word");
  if (sol.sel_a.size() != sol.word.size() || sol.sel_b.size() != sol.word.size())
    throw std::invalid_argument("mmpcp: selector row length mismatch");
  bool differs = false;
  for (std::size_t i = 0; i < sol.word.size(); ++i)
    differs = differs || sol.sel_a[i] != sol.sel_b[i];
  if (!differs)
    throw std::invalid_argument("mmpcp: selector rows must differ somewhere");

  auto image = [&inst](Selector s, const std::string& letter) -> const std::vector<std::string>& {
    const auto& f = s == Selector::H ? inst.h : inst.g;
    auto it = f.find(letter);
    if (it == f.end()) throw std::invalid_argument("mmpcp: unknown letter \"" + letter + "\"");
    return it->second;
  };
  Flat a, b;
  for (std::size_t i = 0; i < sol.word.size(); ++i) {
    const auto& fa = image(sol.sel_a[i], sol.word[i]);
    const auto& fb = image(sol.sel_b[i], sol.word[i]);
    a.insert(a.end(), fa.begin(), fa.end());
    b.insert(b.end(), fb.begin(), fb.end());
  }
  return a == b;
}

std::optional<MixedSolution> brute_search(const MmpcpInstance& inst, int max_len, int cap) {
  if (max_len < 1) throw std::invalid_argument("mmpcp: max_len must be positive");
  if (max_len > cap) throw std::invalid_argument("mmpcp: max_len exceeds the cap");
  {
    const auto bad = validate(inst);
    if (!bad.empty()) throw std::invalid_argument("mmpcp: invalid instance: " + bad.front());
  }
  const int n = static_cast<int>(inst.sigma.size());
  if (n == 0) return std::nullopt;

  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<std::string> word;
      word.reserve(static_cast<std::size_t>(len));
      for (int i : idx) word.push_back(inst.sigma[static_cast<std::size_t>(i)]);

      bool admissible = true;
      if (inst.claus) {
        admissible = word.front() == inst.sigma.front() && word.back() == inst.sigma.back();
        for (int p = 1; admissible && p < len - 1; ++p)
          admissible = word[static_cast<std::size_t>(p)] != inst.sigma.front() &&
                       word[static_cast<std::size_t>(p)] != inst.sigma.back();
      }

      if (admissible) {
        // Positionwise selector sweep with prefix pruning; survivors are
        // reduced to the canonical (selA, selB) minimum afterwards, so the
        // walk order cannot leak into the result.
        std::optional<MixedSolution> best;
        std::vector<Selector> sa, sb;
        Flat fa, fb;
        auto dfs = [&](auto&& self, int pos) -> void {
          if (pos == len) {
            if (fa != fb) return;
            bool differs = false;
            for (int i = 0; i < len; ++i)
              differs = differs || sa[static_cast<std::size_t>(i)] != sb[static_cast<std::size_t>(i)];
            if (!differs) return;
            MixedSolution cand{word, sa, sb};
            if (!best || selectors_less(cand.sel_a, best->sel_a) ||
                (cand.sel_a == best->sel_a && selectors_less(cand.sel_b, best->sel_b)))
              best = std::move(cand);
            return;
          }
          const auto& letter = word[static_cast<std::size_t>(pos)];
          for (Selector x : {Selector::H, Selector::G}) {
            for (Selector y : {Selector::H, Selector::G}) {
              const auto& ia = (x == Selector::H ? inst.h : inst.g).at(letter);
              const auto& ib = (y == Selector::H ? inst.h : inst.g).at(letter);
              const auto sa_len = fa.size(), sb_len = fb.size();
              fa.insert(fa.end(), ia.begin(), ia.end());
              fb.insert(fb.end(), ib.begin(), ib.end());
              if (prefix_compatible(fa, fb)) {
                sa.push_back(x);
                sb.push_back(y);
                self(self, pos + 1);
                sa.pop_back();
                sb.pop_back();
              }
              fa.resize(sa_len);
              fb.resize(sb_len);
            }
          }
        };
        dfs(dfs, 0);
        if (best) return best;
      }

      int p = len - 1;
      while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - 1) {
        idx[static_cast<std::size_t>(p)] = 0;
        --p;
      }
      if (p < 0) break;
      ++idx[static_cast<std::size_t>(p)];
    }
  }
  return std::nullopt;
}

std::map<std::string, int> combined_indices(const MmpcpInstance& inst) {
  std::map<std::string, int> out;
  int k = 1;
  for (const auto& s : inst.sigma) out[s] = k++;
  for (const auto& d : inst.delta) out[d] = k++;
  return out;
}

std::vector<int> image_indices(const MmpcpInstance& inst, Selector s,
                               const std::string& letter) {
  const auto& f = s == Selector::H ? inst.h : inst.g;
  auto it = f.find(letter);
  if (it == f.end()) throw std::invalid_argument("mmpcp: unknown letter \"" + letter + "\"");
  const auto idx = combined_indices(inst);
  std::vector<int> out;
  out.reserve(it->second.size());
  for (const auto& d : it->second) {
    auto jt = idx.find(d);
    if (jt == idx.end()) throw std::invalid_argument("mmpcp: unknown target letter \"" + d + "\"");
    out.push_back(jt->second);
  }
  return out;
}

}  // namespace qfalab

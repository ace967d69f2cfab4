// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance            all criteria
//   acceptance c3 c7      selected criteria
// Exit status 0 iff every selected criterion passes.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "latt/congruence.hpp"
#include "latt/enumerate.hpp"
#include "latt/verify.hpp"
#include "oracles.hpp"

using namespace latt;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string tally_text(const std::map<std::string, long>& tally, size_t limit = 6) {
  std::string s;
  size_t shown = 0;
  for (const auto& [check, count] : tally) {
    if (shown++ == limit) {
      s += "\n    ... " + std::to_string(tally.size() - limit) + " more kinds";
      break;
    }
    s += "\n    " + std::to_string(count) + " x " + check;
  }
  return s;
}

Outcome from_report(const TheoremReport& r) {
  std::string d = "checks=" + std::to_string(r.checks) + " failures=" + std::to_string(r.failure_count);
  if (!r.pass()) d += tally_text(r.failure_tally);
  return {r.pass(), d};
}

// Counts every horizontal-sum failure except the SI checks, which are reported separately.
Outcome hsum_scope() {
  const TheoremReport r = verify_horizontal_sums(3, 6, 5);
  std::map<std::string, long> in_scope, out_scope;
  for (const auto& [check, count] : r.failure_tally)
    (check.find(" SI ") == std::string::npos ? in_scope : out_scope)[check] = count;
  long bad = 0, other = 0;
  for (const auto& kv : in_scope) bad += kv.second;
  for (const auto& kv : out_scope) other += kv.second;
  std::string d = "checks=" + std::to_string(r.checks) + " in-scope failures=" + std::to_string(bad) +
                  " (SI corollary failures outside this criterion: " + std::to_string(other) + ")";
  d += tally_text(in_scope);
  return {bad == 0, d};
}

Outcome oracles() {
  long compared = 0;
  std::vector<std::string> bad;
  for (int n = 1; n <= 6; ++n) {
    const auto& cat = catalog(n);
    std::set<std::vector<char>> codes;
    for (const auto& L : cat.lattices) {
      codes.insert(oracle::canonical_code(oracle::order_of(L)));
      std::vector<std::vector<int>> mine;
      for (const auto& t : all_congruences(L).congruences) mine.push_back(t.block_of);
      std::sort(mine.begin(), mine.end());
      ++compared;
      if (mine != oracle::congruences(L)) bad.push_back("congruences differ on " + to_json(L));
      if (n <= 5) {
        ++compared;
        auto ds = enumerate_weak_complementations(L);
        std::sort(ds.begin(), ds.end());
        if (ds != oracle::weak_complementations(L)) bad.push_back("weak complementations differ on " + to_json(L));
      }
    }
    ++compared;
    if (int(codes.size()) != cat.size() || codes != oracle::lattices(n))
      bad.push_back("catalog(" + std::to_string(n) + ") differs from the poset-filter oracle");
  }
  std::string d = "comparisons=" + std::to_string(compared) + " mismatches=" + std::to_string(bad.size());
  for (size_t i = 0; i < bad.size() && i < 6; ++i) d += "\n    " + bad[i];
  return {bad.empty(), d};
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"c1", "lattice maxima, n = 1..8", [] { return from_report(verify_lattice_maxima(1, 8)); }},
      {"c2", "weak complementation maxima and characterizations, n = 4..8",
       [] { return from_report(verify_wcl_maxima(4, 8)); }},
      {"c3", "dual weak complementation maxima by duality plus ten direct spot cases, n = 4..7",
       [] { return from_report(verify_wdcl_maxima(4, 7, 10)); }},
      {"c4", "weak dicomplementation maxima and characterizations, n = 4..7",
       [] { return from_report(verify_wdl_maxima(4, 7)); }},
      {"c5", "ordinal-sum congruence descriptions, summands up to 5 elements",
       [] { return from_report(verify_ordinal_sums(5)); }},
      {"c6", "horizontal-sum counts, representability, shapes and triple sums, summands 3..6", hsum_scope},
      {"c7", "worked examples", [] { return from_report(verify_examples()); }},
      {"c8", "quotient-size case analyses, n <= 7", [] { return from_report(verify_quotient_size_lemmas(7)); }},
      {"c9", "concept-lattice round trip and smallest weak dicomplementation, n <= 7",
       [] { return from_report(verify_fca(7)); }},
      {"c10", "oracle equivalences (congruences n <= 6, catalog n <= 6, Delta n <= 5)", oracles},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  bool all_pass = true;
  int ran = 0;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    const auto nl = o.detail.find('\n');
    const std::string head = o.detail.substr(0, nl), rest = nl == std::string::npos ? "" : o.detail.substr(nl);
    std::printf("%s %s: %s (%s)%s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL", c.title.c_str(), head.c_str(),
                rest.c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion matches; expected c1..c10\n");
    return 2;
  }
  return all_pass ? 0 : 1;
}

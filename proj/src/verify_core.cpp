#include <algorithm>
#include <sstream>

#include "latt/congruence.hpp"
#include "latt/verify.hpp"

namespace latt {

using nlohmann::json;

namespace {
constexpr size_t kMaxRecorded = 200;

bool finding_less(const Finding& a, const Finding& b) {
  if (a.check != b.check) return a.check < b.check;
  return a.witness.dump() < b.witness.dump();
}
}  // namespace

void TheoremReport::fail(const std::string& check, json witness) {
  ++failure_count;
  ++failure_tally[check];
  if (failures.size() < kMaxRecorded) failures.push_back({check, std::move(witness)});
}

void TheoremReport::flag(const std::string& check, json witness) {
  if (flags.size() < kMaxRecorded) flags.push_back({check, std::move(witness)});
}

void TheoremReport::merge(TheoremReport&& o) {
  checks += o.checks;
  failure_count += o.failure_count;
  for (const auto& [k, v] : o.failure_tally) failure_tally[k] += v;
  for (auto& f : o.failures)
    if (failures.size() < kMaxRecorded) failures.push_back(std::move(f));
  for (auto& f : o.flags)
    if (flags.size() < kMaxRecorded) flags.push_back(std::move(f));
  for (auto& s : o.notes) notes.push_back(std::move(s));
}

void TheoremReport::finalize() {
  std::sort(failures.begin(), failures.end(), finding_less);
  std::sort(flags.begin(), flags.end(), finding_less);
}

json TheoremReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["params"] = params;
  j["checks"] = checks;
  j["pass"] = pass();
  j["failure_count"] = failure_count;
  j["failure_tally"] = failure_tally;
  j["failures"] = json::array();
  for (const auto& f : failures) j["failures"].push_back({{"check", f.check}, {"witness", f.witness}});
  j["flags"] = json::array();
  for (const auto& f : flags) j["flags"].push_back({{"check", f.check}, {"witness", f.witness}});
  j["notes"] = notes;
  j["seconds"] = seconds;
  return j;
}

std::string TheoremReport::summary() const {
  std::ostringstream s;
  s << suite << " " << params.dump() << ": " << (pass() ? "PASS" : "FAIL") << " checks=" << checks
    << " failures=" << failure_count << " flags=" << flags.size();
  return s.str();
}

json lattice_json(const FiniteLattice& L) { return json::parse(to_json(L)); }
json congruence_json(const Congruence& t) { return t.blocks(); }
json congruences_json(const std::vector<Congruence>& cs) {
  json j = json::array();
  for (const auto& t : cs) j.push_back(congruence_json(t));
  return j;
}

UnaryOp product_op(const FiniteLattice& L, const UnaryOp& f, const FiniteLattice& M, const UnaryOp& g) {
  const int m = M.size();
  UnaryOp out(size_t(L.size()) * m);
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < m; ++y) out[x * m + y] = f[x] * m + g[y];
  return out;
}

std::optional<std::vector<int>> op_isomorphism(const FiniteLattice& L, const UnaryOp& opL,
                                               const FiniteLattice& M, const UnaryOp& opM,
                                               const UnaryOp* opL2, const UnaryOp* opM2) {
  const int n = L.size();
  if (M.size() != n || !are_isomorphic(L, M)) return std::nullopt;
  const auto& order = L.linear_extension();
  std::vector<int> f(n, -1), used(n, 0);
  auto consistent = [&](int x) {
    for (int y = 0; y < n; ++y) {
      if (f[y] < 0) continue;
      if (L.leq(x, y) != M.leq(f[x], f[y]) || L.leq(y, x) != M.leq(f[y], f[x])) return false;
    }
    auto op_ok = [&](const UnaryOp& a, const UnaryOp& b) {
      for (int y = 0; y < n; ++y)
        if (f[y] >= 0 && f[a[y]] >= 0 && f[a[y]] != b[f[y]]) return false;
      return true;
    };
    return op_ok(opL, opM) && (!opL2 || op_ok(*opL2, *opM2));
  };
  std::function<bool(int)> go = [&](int i) {
    if (i == n) return true;
    int x = order[i];
    for (int y = 0; y < n; ++y) {
      if (used[y] || L.height(x) != M.height(y) || L.depth(x) != M.depth(y)) continue;
      f[x] = y;
      used[y] = 1;
      if (consistent(x) && go(i + 1)) return true;
      used[y] = 0;
      f[x] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return f;
}

bool is_boolean_complement(const FiniteLattice& L, const UnaryOp& op) {
  for (int x = 0; x < L.size(); ++x)
    if (L.meet(x, op[x]) != L.bottom() || L.join(x, op[x]) != L.top()) return false;
  return true;
}

bool same_set(std::vector<Congruence> a, std::vector<Congruence> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

TheoremReport verify_sum_structures(int size_cap) {
  TheoremReport r = verify_ordinal_sums(size_cap);
  r.merge(verify_horizontal_sums(3, size_cap + 1, std::min(size_cap, 5)));
  r.suite = "sums";
  r.params = {{"size_cap", size_cap}};
  r.finalize();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lat",  "wcl",  "wdcl",      "wdl",      "sums",
                                              "osum", "hsum", "quotients", "examples", "fca"};
  return names;
}

TheoremReport run_suite(const std::string& name, int max_n) {
  if (name == "lat") return verify_lattice_maxima(1, max_n);
  if (name == "wcl") return verify_wcl_maxima(4, max_n);
  if (name == "wdcl") return verify_wdcl_maxima(4, max_n);
  if (name == "wdl") return verify_wdl_maxima(4, max_n);
  if (name == "sums") return verify_sum_structures(max_n);
  if (name == "osum") return verify_ordinal_sums(max_n);
  if (name == "hsum") return verify_horizontal_sums(3, max_n, std::min(max_n, 5));
  if (name == "quotients") return verify_quotient_size_lemmas(max_n);
  if (name == "examples") return verify_examples();
  if (name == "fca") return verify_fca(max_n);
  throw Error(ErrorKind::Parse, "unknown suite \"" + name + "\"");
}

}  // namespace latt

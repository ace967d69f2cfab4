#include "latt/enumerate.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace latt {

namespace {

// K plus a new coatom whose strict down-set is D (a down-set of K without its top).
std::optional<FiniteLattice> add_coatom(const FiniteLattice& K, const ElementSet& D) {
  const int m = K.size();
  BoolMatrix leq(m + 1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (K.leq(x, y)) leq.set(x, y);
  leq.set(m, m);
  leq.set(m, K.top());
  for (int x : D.members()) leq.set(x, m);
  try {
    return FiniteLattice::validate(leq);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

LatticeCatalog enumerate_lattices(int n) {
  if (n < 1 || n > kEnumCap) throw Error(ErrorKind::CapExceeded, "lattice enumeration supports 1 <= n <= 9");
  LatticeCatalog c;
  c.n = n;
  if (n <= 2) {
    c.lattices.push_back(canonical_lattice(n == 1 ? FiniteLattice::from_covers(1, {})
                                                  : FiniteLattice::from_covers(2, {{0, 1}})));
    return c;
  }
  // Every lattice with n >= 3 has a coatom, and removing it leaves a lattice.
  std::map<std::vector<uint64_t>, FiniteLattice> found;
  for (const auto& K : catalog(n - 1).lattices) {
    const int m = K.size();
    std::vector<int> rest;
    for (int x = 0; x < m; ++x)
      if (x != K.top()) rest.push_back(x);
    const int r = int(rest.size());
    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
      ElementSet D(m);
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) D.insert(rest[i]);
      if (!D.contains(K.bottom())) continue;
      bool down = true;
      for (int x : D.members())
        for (int y : K.lower_covers(x))
          if (!D.contains(y)) down = false;
      if (!down) continue;
      auto L = add_coatom(K, D);
      if (!L) continue;
      auto cf = canonical_form(*L);
      if (!found.count(cf.cert)) found.emplace(cf.cert, relabel(*L, cf.perm));
    }
  }
  for (auto& [cert, L] : found) c.lattices.push_back(std::move(L));
  return c;
}

const LatticeCatalog& catalog(int n) {
  static std::mutex mu;
  static std::map<int, LatticeCatalog> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  LatticeCatalog c = enumerate_lattices(n);
  std::lock_guard lock(mu);
  return memo.emplace(n, std::move(c)).first->second;
}

std::vector<WclAlgebra> enumerate_wcl_algebras(int n) {
  const auto& c = catalog(n);
  std::vector<WclAlgebra> out;
  for (int i = 0; i < c.size(); ++i)
    for (auto& d : enumerate_weak_complementations(c.lattices[i])) out.push_back({i, std::move(d)});
  return out;
}

std::string catalog_to_jsonl(const LatticeCatalog& c) {
  std::string s;
  for (const auto& L : c.lattices) s += to_json(L) + "\n";
  return s;
}

LatticeCatalog catalog_from_jsonl(const std::string& text) {
  LatticeCatalog c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    c.lattices.push_back(lattice_from_json(line));
    if (c.n == 0) c.n = c.lattices.back().size();
    if (c.lattices.back().size() != c.n) throw Error(ErrorKind::Parse, "mixed lattice sizes in catalog");
  }
  return c;
}

}  // namespace latt

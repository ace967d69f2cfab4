#pragma once

// Brute-force reference implementations. They use only FiniteLattice::leq and
// recompute everything else from the order relation.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "latt/lattice.hpp"

namespace oracle {

using Leq = std::vector<std::vector<char>>;

inline Leq order_of(const latt::FiniteLattice& L) {
  const int n = L.size();
  Leq r(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r[x][y] = L.leq(x, y);
  return r;
}

// Greatest lower bound / least upper bound by scanning, or -1.
inline int glb(const Leq& le, int x, int y) {
  const int n = int(le.size());
  for (int z = 0; z < n; ++z) {
    if (!le[z][x] || !le[z][y]) continue;
    bool greatest = true;
    for (int w = 0; w < n && greatest; ++w)
      if (le[w][x] && le[w][y] && !le[w][z]) greatest = false;
    if (greatest) return z;
  }
  return -1;
}

inline int lub(const Leq& le, int x, int y) {
  const int n = int(le.size());
  for (int z = 0; z < n; ++z) {
    if (!le[x][z] || !le[y][z]) continue;
    bool least = true;
    for (int w = 0; w < n && least; ++w)
      if (le[x][w] && le[y][w] && !le[z][w]) least = false;
    if (least) return z;
  }
  return -1;
}

struct Tables {
  Leq le;
  std::vector<std::vector<int>> meet, join;
  int bot = 0, top = 0;
};

inline Tables tables(const latt::FiniteLattice& L) {
  Tables t;
  t.le = order_of(L);
  const int n = L.size();
  t.meet.assign(n, std::vector<int>(n));
  t.join.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      t.meet[x][y] = glb(t.le, x, y);
      t.join[x][y] = lub(t.le, x, y);
    }
  for (int x = 0; x < n; ++x) {
    if (std::all_of(t.le[x].begin(), t.le[x].end(), [](char c) { return c != 0; })) t.bot = x;
    bool top = true;
    for (int y = 0; y < n; ++y) top = top && t.le[y][x];
    if (top) t.top = x;
  }
  return t;
}

// Every congruence by enumerating all set partitions (restricted growth strings).
// Each result maps an element to the least member of its block.
inline std::vector<std::vector<int>> congruences(const latt::FiniteLattice& L) {
  const Tables t = tables(L);
  const int n = L.size();
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      for (int x = 0; x < n; ++x)
        for (int x2 = 0; x2 < n; ++x2) {
          if (rgs[x] != rgs[x2]) continue;
          for (int y = 0; y < n; ++y)
            if (rgs[t.meet[x][y]] != rgs[t.meet[x2][y]] || rgs[t.join[x][y]] != rgs[t.join[x2][y]]) return;
        }
      std::vector<int> least(n);
      for (int x = 0; x < n; ++x) {
        least[x] = x;
        for (int y = 0; y < x; ++y)
          if (rgs[y] == rgs[x]) {
            least[x] = y;
            break;
          }
      }
      out.push_back(least);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Every map L -> L satisfying the weak complementation axioms as stated:
// x <= y => yΔ <= xΔ, xΔΔ <= x, (x∧y)∨(x∧yΔ) = x.
inline std::vector<std::vector<int>> weak_complementations(const latt::FiniteLattice& L, bool dual = false) {
  Tables t = tables(L);
  if (dual) {
    const int n = L.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t.le[x][y] = L.leq(y, x);
    std::swap(t.meet, t.join);
  }
  const int n = L.size();
  std::vector<std::vector<int>> out;
  std::vector<int> d(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (long c = 0; c < total; ++c) {
    long v = c;
    for (int i = 0; i < n; ++i, v /= n) d[i] = int(v % n);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = t.le[d[d[x]]][x];
      for (int y = 0; y < n && ok; ++y) {
        if (t.le[x][y] && !t.le[d[y]][d[x]]) ok = false;
        if (t.join[t.meet[x][y]][t.meet[x][d[y]]] != x) ok = false;
      }
    }
    if (ok) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Canonical code of an order relation: lexicographically least adjacency
// string over all relabellings.
inline std::vector<char> canonical_code(const Leq& le) {
  const int n = int(le.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> best;
  do {
    std::vector<char> code;
    code.reserve(size_t(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) code.push_back(le[p[x]][p[y]]);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// All n-element lattices up to isomorphism, as canonical codes. Elements are
// numbered along a linear extension with 0 the bottom and n-1 the top; every
// strict order on the interior compatible with that numbering is tried, and the
// ones in which every pair has a join are kept.
inline std::set<std::vector<char>> lattices(int n) {
  std::set<std::vector<char>> out;
  if (n <= 2) {
    Leq le(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) le[x][y] = 1;
    out.insert(canonical_code(le));
    return out;
  }
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) slots.push_back({i, j});
  for (long mask = 0; mask < (1L << slots.size()); ++mask) {
    Leq le(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x) {
      le[x][x] = 1;
      le[0][x] = 1;
      le[x][n - 1] = 1;
    }
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) le[slots[s].first][slots[s].second] = 1;
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y = 0; y < n && transitive; ++y)
        for (int z = 0; z < n && transitive; ++z)
          if (le[x][y] && le[y][z] && !le[x][z]) transitive = false;
    if (!transitive) continue;
    bool lattice = true;
    for (int x = 0; x < n && lattice; ++x)
      for (int y = x + 1; y < n && lattice; ++y) lattice = lub(le, x, y) >= 0;
    if (lattice) out.insert(canonical_code(le));
  }
  return out;
}

}  // namespace oracle

#include <algorithm>
#include <map>

#include "latt/lattice.hpp"

namespace latt {

namespace {

using Adj = std::vector<std::vector<int>>;

struct Graph {
  Adj low, up;
};

Graph cover_graph(const FiniteLattice& L, int offset, Graph g = {}) {
  for (int x = 0; x < L.size(); ++x) {
    std::vector<int> lo, hi;
    for (int y : L.lower_covers(x)) lo.push_back(y + offset);
    for (int y : L.upper_covers(x)) hi.push_back(y + offset);
    g.low.push_back(std::move(lo));
    g.up.push_back(std::move(hi));
  }
  return g;
}

std::vector<int> initial_signature(const FiniteLattice& L, int x) {
  int below = 0, above = 0;
  for (int y = 0; y < L.size(); ++y) {
    below += L.leq(y, x);
    above += L.leq(x, y);
  }
  return {L.height(x), L.depth(x), int(L.lower_covers(x).size()), int(L.upper_covers(x).size()),
          below, above};
}

int rank_signatures(const std::vector<std::vector<int>>& sig, std::vector<int>& color) {
  std::vector<int> idx(sig.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  int rank = -1;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) ++rank;
    color[idx[i]] = rank;
  }
  return rank + 1;
}

// Equitable refinement of an ordered coloring along the cover graph.
int refine(const Graph& g, std::vector<int>& color) {
  const size_t N = color.size();
  std::vector<std::vector<int>> sig(N);
  int classes = -1;
  while (true) {
    for (size_t v = 0; v < N; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(color[v]);
      std::vector<int> lo, hi;
      for (int u : g.low[v]) lo.push_back(color[u]);
      for (int u : g.up[v]) hi.push_back(color[u]);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      s.push_back(int(lo.size()));
      s.insert(s.end(), lo.begin(), lo.end());
      s.push_back(int(hi.size()));
      s.insert(s.end(), hi.begin(), hi.end());
    }
    int k = rank_signatures(sig, color);
    if (k == classes) return k;
    classes = k;
  }
}

std::vector<int> individualize(const std::vector<int>& color, std::initializer_list<int> vs) {
  std::vector<int> c(color.size());
  for (size_t u = 0; u < color.size(); ++u) c[u] = 2 * color[u] + 1;
  for (int v : vs) c[v] = 2 * color[v];
  return c;
}

struct CanonSearch {
  const FiniteLattice& L;
  Graph g;
  std::vector<uint64_t> best;
  std::vector<int> best_perm;
  bool have = false;

  std::vector<uint64_t> certificate(const std::vector<int>& pos) const {
    const int n = L.size();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[pos[v]] = v;
    std::vector<uint64_t> cert((size_t(n) * n + 63) / 64, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (L.leq(inv[i], inv[j])) {
          size_t b = size_t(i) * n + j;
          cert[b >> 6] |= uint64_t{1} << (b & 63);
        }
    return cert;
  }

  void run(std::vector<int> color) {
    const int n = L.size();
    int k = refine(g, color);
    if (k == n) {
      auto cert = certificate(color);
      if (!have || cert < best) {
        best = std::move(cert);
        best_perm = color;
        have = true;
      }
      return;
    }
    std::vector<int> cnt(k, 0);
    for (int c : color) ++cnt[c];
    int target = -1;
    for (int c = 0; c < k; ++c)
      if (cnt[c] > 1 && (target < 0 || cnt[c] < cnt[target])) target = c;
    for (int v = 0; v < n; ++v)
      if (color[v] == target) run(individualize(color, {v}));
  }
};

struct IsoSearch {
  const FiniteLattice& L;
  const FiniteLattice& M;
  Graph g;
  std::vector<int> result;

  bool run(std::vector<int> color) {
    const int n = L.size();
    int k = refine(g, color);
    std::vector<int> cl(k, 0), cm(k, 0);
    for (int v = 0; v < n; ++v) ++cl[color[v]];
    for (int v = n; v < 2 * n; ++v) ++cm[color[v]];
    if (cl != cm) return false;
    int target = -1;
    for (int c = 0; c < k; ++c)
      if (cl[c] > 1 && (target < 0 || cl[c] < cl[target])) target = c;
    if (target < 0) {
      std::vector<int> where(k);
      for (int v = n; v < 2 * n; ++v) where[color[v]] = v - n;
      std::vector<int> f(n);
      for (int v = 0; v < n; ++v) f[v] = where[color[v]];
      if (!is_isomorphism(L, M, f)) return false;
      result = std::move(f);
      return true;
    }
    int v = 0;
    while (color[v] != target) ++v;
    for (int w = n; w < 2 * n; ++w)
      if (color[w] == target && run(individualize(color, {v, w}))) return true;
    return false;
  }
};

}  // namespace

CanonicalForm canonical_form(const FiniteLattice& L) {
  CanonSearch s{L, cover_graph(L, 0), {}, {}, false};
  std::vector<std::vector<int>> sig(L.size());
  for (int x = 0; x < L.size(); ++x) sig[x] = initial_signature(L, x);
  std::vector<int> color(L.size());
  rank_signatures(sig, color);
  s.run(color);
  return {s.best_perm, s.best};
}

FiniteLattice canonical_lattice(const FiniteLattice& L) { return relabel(L, canonical_form(L).perm); }

std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& L, const FiniteLattice& M) {
  const int n = L.size();
  if (M.size() != n) return std::nullopt;
  IsoSearch s{L, M, cover_graph(M, n, cover_graph(L, 0)), {}};
  std::vector<std::vector<int>> sig(2 * n);
  for (int x = 0; x < n; ++x) {
    sig[x] = initial_signature(L, x);
    sig[x + n] = initial_signature(M, x);
  }
  std::vector<int> color(2 * n);
  rank_signatures(sig, color);
  if (!s.run(color)) return std::nullopt;
  return s.result;
}

}  // namespace latt

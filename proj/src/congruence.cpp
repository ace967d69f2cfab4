#include "latt/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "latt/constructions.hpp"

namespace latt {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    p[b] = a;  // root stays the least member
    return true;
  }
  Congruence result() {
    Congruence t;
    t.block_of.resize(p.size());
    for (size_t x = 0; x < p.size(); ++x) t.block_of[x] = find(int(x));
    return t;
  }
};

}  // namespace

int Congruence::num_blocks() const {
  int c = 0;
  for (int x = 0; x < size(); ++x) c += block_of[x] == x;
  return c;
}

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(size(), -1);
  for (int x = 0; x < size(); ++x) {
    int r = block_of[x];
    if (idx[r] < 0) {
      idx[r] = int(out.size());
      out.emplace_back();
    }
    out[idx[r]].push_back(x);
  }
  return out;
}

std::vector<int> Congruence::block(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (block_of[y] == block_of[x]) out.push_back(y);
  return out;
}

bool Congruence::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (block_of[x] != x) return false;
  return true;
}

bool Congruence::is_full() const {
  for (int x = 0; x < size(); ++x)
    if (block_of[x] != 0) return false;
  return true;
}

Congruence identity_congruence(int n) {
  Congruence t;
  t.block_of.resize(n);
  std::iota(t.block_of.begin(), t.block_of.end(), 0);
  return t;
}

Congruence full_congruence(int n) { return Congruence{std::vector<int>(n, 0)}; }

Congruence from_labels(const std::vector<int>& labels) {
  UnionFind uf(int(labels.size()));
  for (size_t x = 0; x < labels.size(); ++x)
    for (size_t y = 0; y < x; ++y)
      if (labels[x] == labels[y]) {
        uf.unite(int(x), int(y));
        break;
      }
  return uf.result();
}

Congruence eps(int n, const std::vector<std::vector<int>>& sets) {
  UnionFind uf(n);
  for (const auto& s : sets)
    for (size_t i = 1; i < s.size(); ++i) uf.unite(s[0], s[i]);
  return uf.result();
}

Congruence eps(const FiniteLattice& L, const ElementSet& S) { return eps(L.size(), {S.members()}); }

bool refines(const Congruence& a, const Congruence& b) {
  for (int x = 0; x < a.size(); ++x)
    if (b.block_of[x] != b.block_of[a.block_of[x]]) return false;
  return true;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  UnionFind uf(a.size());
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < x; ++y)
      if (a.same(x, y) && b.same(x, y)) {
        uf.unite(x, y);
        break;
      }
  return uf.result();
}

Congruence join(const Congruence& a, const Congruence& b) {
  UnionFind uf(a.size());
  for (int x = 0; x < a.size(); ++x) {
    uf.unite(x, a.block_of[x]);
    uf.unite(x, b.block_of[x]);
  }
  return uf.result();
}

bool is_congruence(const FiniteLattice& L, const Congruence& t) {
  const int n = L.size();
  if (t.size() != n) return false;
  for (int x = 0; x < n; ++x) {
    int y = t.block_of[x];
    if (y == x) continue;
    // pairs (x, least member) generate the equivalence
    for (int z = 0; z < n; ++z) {
      if (!t.same(L.meet(x, z), L.meet(y, z))) return false;
      if (!t.same(L.join(x, z), L.join(y, z))) return false;
    }
  }
  return true;
}

Congruence congruence_closure(const FiniteLattice& L, const Congruence& seed, const std::vector<int>* op,
                              const std::vector<int>* op2) {
  const int n = L.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  for (int x = 0; x < n; ++x)
    if (seed.block_of[x] != x) work.emplace_back(x, seed.block_of[x]);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    for (int z = 0; z < n; ++z) {
      work.emplace_back(L.meet(x, z), L.meet(y, z));
      work.emplace_back(L.join(x, z), L.join(y, z));
    }
    if (op) work.emplace_back((*op)[x], (*op)[y]);
    if (op2) work.emplace_back((*op2)[x], (*op2)[y]);
  }
  return uf.result();
}

Congruence principal_congruence(const FiniteLattice& L, int a, int b) {
  return congruence_closure(L, eps(L.size(), {{a, b}}));
}

int ConLattice::index_of(const Congruence& t) const {
  for (int i = 0; i < size(); ++i)
    if (congruences[i] == t) return i;
  return -1;
}

ConLattice make_con_lattice(std::vector<Congruence> cs) {
  std::sort(cs.begin(), cs.end(), [](const Congruence& a, const Congruence& b) {
    int na = a.num_blocks(), nb = b.num_blocks();
    if (na != nb) return na > nb;
    return a.block_of < b.block_of;
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  const int m = int(cs.size());
  BoolMatrix leq(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (refines(cs[i], cs[j])) leq.set(i, j);
  ConLattice c;
  c.order = FiniteLattice::validate(leq);
  c.congruences = std::move(cs);
  return c;
}

ConLattice all_congruences(const FiniteLattice& L) {
  const int n = L.size();
  std::set<Congruence> gens;
  for (auto [a, b] : covers(L)) gens.insert(principal_congruence(L, a, b));
  std::set<Congruence> seen{identity_congruence(n)};
  std::vector<Congruence> queue{identity_congruence(n)};
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Congruence j = join(queue[i], g);
      if (seen.insert(j).second) queue.push_back(j);
    }
  }
  return make_con_lattice(std::move(queue));
}

std::vector<Congruence> filter_singleton(const std::vector<Congruence>& cs, int x) {
  std::vector<Congruence> out;
  for (const auto& t : cs) {
    bool single = true;
    for (int y = 0; y < t.size() && single; ++y)
      if (y != x && t.same(x, y)) single = false;
    if (single) out.push_back(t);
  }
  return out;
}

std::vector<Congruence> con_filtered(const FiniteLattice& L, bool fix_bottom, bool fix_top) {
  auto cs = all_congruences(L).congruences;
  if (fix_bottom) cs = filter_singleton(cs, L.bottom());
  if (fix_top) cs = filter_singleton(cs, L.top());
  return cs;
}

Quotient quotient(const FiniteLattice& L, const Congruence& t) {
  if (!is_congruence(L, t)) throw Error(ErrorKind::NotACongruence, "partition is not a congruence");
  const int n = L.size();
  Quotient q;
  q.projection.assign(n, -1);
  std::vector<int> rep;
  for (int x = 0; x < n; ++x)
    if (t.block_of[x] == x) {
      q.projection[x] = int(rep.size());
      rep.push_back(x);
    }
  for (int x = 0; x < n; ++x) q.projection[x] = q.projection[t.block_of[x]];
  const int m = int(rep.size());
  BoolMatrix leq(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (t.same(L.join(rep[i], rep[j]), rep[j])) leq.set(i, j);
  q.lattice = FiniteLattice::validate(leq);
  return q;
}

Congruence osum_congruence(const FiniteLattice& L, const FiniteLattice& M, const Congruence& a,
                           const Congruence& b) {
  UnionFind uf(L.size() + M.size() - 1);
  auto f = osum_right_embedding(L, M);
  for (int x = 0; x < L.size(); ++x) uf.unite(x, a.block_of[x]);
  for (int y = 0; y < M.size(); ++y) uf.unite(f[y], f[b.block_of[y]]);
  return uf.result();
}

Congruence hsum_congruence(const FiniteLattice& L, const FiniteLattice& M, const Congruence& a,
                           const Congruence& b) {
  if (a.is_full() || b.is_full())
    throw Error(ErrorKind::FullCongruenceInHsum, "horizontal sum of congruences needs proper summands");
  UnionFind uf(L.size() + M.size() - 2);
  auto f = hsum_right_embedding(L, M);
  for (int x = 0; x < L.size(); ++x) uf.unite(x, a.block_of[x]);
  for (int y = 0; y < M.size(); ++y) uf.unite(f[y], f[b.block_of[y]]);
  return uf.result();
}

bool is_subdirectly_irreducible(const ConLattice& c) {
  return c.order.upper_covers(c.order.bottom()).size() == 1;
}

std::string to_json(const Congruence& t) {
  nlohmann::ordered_json j;
  j["blocks"] = t.blocks();
  return j.dump();
}

Congruence congruence_from_json(const std::string& text, int n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
    throw Error(ErrorKind::Parse, "expected {\"blocks\": [[...],...]}");
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> sets;
  for (const auto& blk : j["blocks"]) {
    std::vector<int> s;
    for (const auto& v : blk) {
      if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "block members must be integers");
      int x = v.get<int>();
      if (x < 0 || x >= n || seen[x]++) throw Error(ErrorKind::Parse, "blocks must partition 0..n-1");
      s.push_back(x);
    }
    if (s.empty()) throw Error(ErrorKind::Parse, "empty block");
    sets.push_back(std::move(s));
  }
  for (int x = 0; x < n; ++x)
    if (!seen[x]) throw Error(ErrorKind::Parse, "blocks must partition 0..n-1");
  return eps(n, sets);
}

}  // namespace latt

#include "latt/wdl.hpp"

#include <algorithm>

#include <json.hpp>

namespace latt {

namespace {

bool well_indexed(const FiniteLattice& L, const UnaryOp& d) {
  if (int(d.size()) != L.size()) return false;
  for (int v : d)
    if (v < 0 || v >= L.size()) return false;
  return true;
}

std::string pair_str(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

}  // namespace

std::optional<std::string> wcl_violation(const FiniteLattice& L, const UnaryOp& d) {
  if (!well_indexed(L, d)) return "table size or range mismatch";
  const int n = L.size();
  for (int x = 0; x < n; ++x) {
    if (!L.leq(d[d[x]], x)) return "dd(x) <= x fails at " + std::to_string(x);
    for (int y = 0; y < n; ++y) {
      if (L.leq(x, y) && !L.leq(d[y], d[x])) return "not antitone at " + pair_str(x, y);
      if (L.join(L.meet(x, y), L.meet(x, d[y])) != x) return "(x^y)v(x^dy)=x fails at " + pair_str(x, y);
    }
  }
  return std::nullopt;
}

std::optional<std::string> wdcl_violation(const FiniteLattice& L, const UnaryOp& d) {
  if (!well_indexed(L, d)) return "table size or range mismatch";
  const int n = L.size();
  for (int x = 0; x < n; ++x) {
    if (!L.leq(x, d[d[x]])) return "x <= nn(x) fails at " + std::to_string(x);
    for (int y = 0; y < n; ++y) {
      if (L.leq(x, y) && !L.leq(d[y], d[x])) return "not antitone at " + pair_str(x, y);
      if (L.meet(L.join(x, y), L.join(x, d[y])) != x) return "(xvy)^(xvny)=x fails at " + pair_str(x, y);
    }
  }
  return std::nullopt;
}

bool is_dicomplementation(const FiniteLattice& L, const UnaryOp& delta, const UnaryOp& nabla) {
  if (!is_weak_complementation(L, delta) || !is_dual_weak_complementation(L, nabla)) return false;
  for (int x = 0; x < L.size(); ++x)
    if (!L.leq(nabla[x], delta[x])) return false;
  return true;
}

UnaryOp trivial_delta(const FiniteLattice& L) {
  UnaryOp d(L.size(), L.top());
  d[L.top()] = L.bottom();
  return d;
}

UnaryOp trivial_nabla(const FiniteLattice& L) {
  UnaryOp d(L.size(), L.bottom());
  d[L.bottom()] = L.top();
  return d;
}

bool is_trivial_delta(const FiniteLattice& L, const UnaryOp& d) { return d == trivial_delta(L); }
bool is_trivial_nabla(const FiniteLattice& L, const UnaryOp& d) { return d == trivial_nabla(L); }

std::optional<UnaryOp> delta_ab(const FiniteLattice& L, int a, int b) {
  const int n = L.size();
  if (a < 0 || b < 0 || a >= n || b >= n || a == b || a == L.bottom() || a == L.top() ||
      b == L.bottom() || b == L.top())
    throw Error(ErrorKind::BadElements, "delta_ab needs distinct a,b outside {0,1}");
  UnaryOp d = trivial_delta(L);
  d[a] = b;
  d[b] = a;
  if (!is_weak_complementation(L, d)) return std::nullopt;
  return d;
}

std::optional<UnaryOp> nabla_ab(const FiniteLattice& L, int a, int b) {
  const int n = L.size();
  if (a < 0 || b < 0 || a >= n || b >= n || a == b || a == L.bottom() || a == L.top() ||
      b == L.bottom() || b == L.top())
    throw Error(ErrorKind::BadElements, "nabla_ab needs distinct a,b outside {0,1}");
  UnaryOp d = trivial_nabla(L);
  d[a] = b;
  d[b] = a;
  if (!is_dual_weak_complementation(L, d)) return std::nullopt;
  return d;
}

namespace {

struct DeltaSearch {
  const FiniteLattice& L;
  std::vector<int> order;  // top-down linear extension
  UnaryOp d;
  std::vector<char> assigned;
  std::vector<UnaryOp> out;

  bool admissible(int x, int z) const {
    const int n = L.size();
    if (L.join(x, z) != L.top()) return false;
    for (int y = 0; y < n; ++y) {
      // x ∧ y = 0 forces Δx ≥ y
      if (L.meet(x, y) == L.bottom() && !L.leq(y, z)) return false;
      if (assigned[y]) {
        if (L.leq(x, y) && !L.leq(d[y], z)) return false;
        if (L.leq(y, x) && !L.leq(z, d[y])) return false;
        if (d[y] == x && !L.leq(z, y)) return false;  // ΔΔy ≤ y
      }
      if (L.join(L.meet(y, x), L.meet(y, z)) != y) return false;
    }
    if (z == x) return true;
    if (assigned[z] && !L.leq(d[z], x)) return false;  // ΔΔx ≤ x
    return true;
  }

  void run(size_t i) {
    if (i == order.size()) {
      if (is_weak_complementation(L, d)) out.push_back(d);
      return;
    }
    int x = order[i];
    for (int z = 0; z < L.size(); ++z) {
      if (!admissible(x, z)) continue;
      d[x] = z;
      assigned[x] = 1;
      run(i + 1);
      assigned[x] = 0;
    }
  }
};

}  // namespace

std::vector<UnaryOp> enumerate_weak_complementations(const FiniteLattice& L) {
  const int n = L.size();
  if (n == 1) return {UnaryOp{0}};
  DeltaSearch s{L, {}, UnaryOp(n, -1), std::vector<char>(n, 0), {}};
  s.d[L.top()] = L.bottom();
  s.assigned[L.top()] = 1;
  const auto& ext = L.linear_extension();
  for (auto it = ext.rbegin(); it != ext.rend(); ++it)
    if (*it != L.top()) s.order.push_back(*it);
  s.run(0);
  std::sort(s.out.begin(), s.out.end());
  s.out.erase(std::unique(s.out.begin(), s.out.end()), s.out.end());
  return s.out;
}

std::vector<UnaryOp> enumerate_dual_weak_complementations(const FiniteLattice& L) {
  return enumerate_weak_complementations(dual(L));
}

std::vector<DicompLattice> enumerate_dicomplementations(const FiniteLattice& L) {
  std::vector<DicompLattice> out;
  auto ds = enumerate_weak_complementations(L);
  auto ns = enumerate_dual_weak_complementations(L);
  for (const auto& d : ds)
    for (const auto& nb : ns) {
      bool ok = true;
      for (int x = 0; x < L.size() && ok; ++x) ok = L.leq(nb[x], d[x]);
      if (ok) out.push_back({L, d, nb});
    }
  return out;
}

bool is_join_dense(const FiniteLattice& L, const ElementSet& J) {
  for (int x = 0; x < L.size(); ++x) {
    int j = L.bottom();
    for (int y : J.members())
      if (L.leq(y, x)) j = L.join(j, y);
    if (j != x) return false;
  }
  return true;
}

bool is_meet_dense(const FiniteLattice& L, const ElementSet& M) {
  for (int x = 0; x < L.size(); ++x) {
    int m = L.top();
    for (int y : M.members())
      if (L.leq(x, y)) m = L.meet(m, y);
    if (m != x) return false;
  }
  return true;
}

std::optional<UnaryOp> delta_from_join_dense(const FiniteLattice& L, const ElementSet& J) {
  if (!is_join_dense(L, J)) return std::nullopt;
  UnaryOp d(L.size());
  for (int x = 0; x < L.size(); ++x) {
    int j = L.bottom();
    for (int y : J.members())
      if (!L.leq(y, x)) j = L.join(j, y);
    d[x] = j;
  }
  return d;
}

std::optional<UnaryOp> nabla_from_meet_dense(const FiniteLattice& L, const ElementSet& M) {
  if (!is_meet_dense(L, M)) return std::nullopt;
  UnaryOp d(L.size());
  for (int x = 0; x < L.size(); ++x) {
    int m = L.top();
    for (int y : M.members())
      if (!L.leq(x, y)) m = L.meet(m, y);
    d[x] = m;
  }
  return d;
}

namespace {

template <class Build>
std::optional<ElementSet> representable_search(const FiniteLattice& L, const UnaryOp& op, ElementSet base,
                                               int excluded, Build build) {
  std::vector<int> rest;
  for (int x = 0; x < L.size(); ++x)
    if (x != excluded && !base.contains(x)) rest.push_back(x);
  const int r = int(rest.size());
  if (r > 24) throw Error(ErrorKind::CapExceeded, "representability search space too large");
  for (int k = 0; k <= r; ++k) {
    // subsets of size k in lexicographic order of index vectors
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      ElementSet J = base;
      for (int i : pick) J.insert(rest[i]);
      auto d = build(L, J);
      if (d && *d == op) return J;
      int i = k - 1;
      while (i >= 0 && pick[i] == r - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ElementSet> is_representable(const FiniteLattice& L, const UnaryOp& delta) {
  if (L.size() == 1) return ElementSet(1);
  return representable_search(L, delta, join_irreducibles(L), L.bottom(),
                              [](const FiniteLattice& K, const ElementSet& J) { return delta_from_join_dense(K, J); });
}

std::optional<ElementSet> is_dual_representable(const FiniteLattice& L, const UnaryOp& nabla) {
  if (L.size() == 1) return ElementSet(1);
  return representable_search(L, nabla, meet_irreducibles(L), L.top(),
                              [](const FiniteLattice& K, const ElementSet& M) { return nabla_from_meet_dense(K, M); });
}

bool has_nontrivial_delta(const FiniteLattice& L) {
  auto J = join_irreducibles(L);
  auto M = meet_irreducibles(L).members();
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = i; j < M.size(); ++j) {
      auto cover = L.principal_ideal(M[i]) | L.principal_ideal(M[j]);
      if (J.subset_of(cover)) return true;
    }
  return false;
}

bool has_nontrivial_nabla(const FiniteLattice& L) { return has_nontrivial_delta(dual(L)); }

bool preserves(const Congruence& t, const UnaryOp& op) {
  for (int x = 0; x < t.size(); ++x)
    if (!t.same(op[x], op[t.block_of[x]])) return false;
  return true;
}

std::vector<Congruence> filter_preserving(const std::vector<Congruence>& cs, const UnaryOp& op) {
  std::vector<Congruence> out;
  for (const auto& t : cs)
    if (preserves(t, op)) out.push_back(t);
  return out;
}

ConLattice con_wcl(const FiniteLattice& L, const UnaryOp& delta) {
  return make_con_lattice(filter_preserving(all_congruences(L).congruences, delta));
}

ConLattice con_wdcl(const FiniteLattice& L, const UnaryOp& nabla) {
  return make_con_lattice(filter_preserving(all_congruences(L).congruences, nabla));
}

ConLattice con_wdl(const DicompLattice& D) {
  auto cs = filter_preserving(all_congruences(D.lattice).congruences, D.delta);
  return make_con_lattice(filter_preserving(cs, D.nabla));
}

OpQuotient quotient_wcl(const FiniteLattice& L, const UnaryOp& delta, const Congruence& t) {
  if (!is_congruence(L, t)) throw Error(ErrorKind::NotACongruence, "partition is not a congruence");
  if (!preserves(t, delta)) throw Error(ErrorKind::NotDeltaPreserving, "congruence does not preserve the operation");
  Quotient q = quotient(L, t);
  OpQuotient r{q.lattice, UnaryOp(q.lattice.size()), q.projection};
  for (int x = 0; x < L.size(); ++x) r.op[q.projection[x]] = q.projection[delta[x]];
  return r;
}

Congruence principal_wcl_congruence(const FiniteLattice& L, const UnaryOp& delta, int a, int b) {
  return congruence_closure(L, eps(L.size(), {{a, b}}), &delta);
}

bool is_subuniverse_wcl(const FiniteLattice& L, const UnaryOp& delta, const ElementSet& part) {
  if (!part.contains(L.bottom()) || !part.contains(L.top()))
    throw Error(ErrorKind::NotASublattice, "part must contain 0 and 1");
  auto ms = part.members();
  for (int x : ms)
    for (int y : ms)
      if (!part.contains(L.meet(x, y)) || !part.contains(L.join(x, y)))
        throw Error(ErrorKind::NotASublattice, "part is not closed under meet and join");
  for (int x : ms)
    if (!part.contains(delta[x])) return false;
  return true;
}

std::string to_json(const Algebra& a) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(a.lattice));
  if (a.delta) j["delta"] = *a.delta;
  if (a.nabla) j["nabla"] = *a.nabla;
  return j.dump();
}

Algebra algebra_from_json(const std::string& text) {
  Algebra a{lattice_from_json(text), std::nullopt, std::nullopt};
  nlohmann::json j = nlohmann::json::parse(text);
  auto read = [&](const char* key) -> std::optional<UnaryOp> {
    if (!j.contains(key)) return std::nullopt;
    const auto& v = j[key];
    if (!v.is_array() || int(v.size()) != a.lattice.size())
      throw Error(ErrorKind::Parse, std::string(key) + " must list one value per element");
    UnaryOp op;
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw Error(ErrorKind::Parse, std::string(key) + " values must be integers");
      op.push_back(x.get<int>());
    }
    return op;
  };
  a.delta = read("delta");
  a.nabla = read("nabla");
  if (a.delta) {
    if (auto v = wcl_violation(a.lattice, *a.delta)) throw Error(ErrorKind::BadElements, "delta: " + *v);
  }
  if (a.nabla) {
    if (auto v = wdcl_violation(a.lattice, *a.nabla)) throw Error(ErrorKind::BadElements, "nabla: " + *v);
  }
  return a;
}

}  // namespace latt

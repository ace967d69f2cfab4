#include "latt/shape.hpp"

#include <algorithm>
#include <functional>

#include "latt/congruence.hpp"

namespace latt {

namespace {

using K = Expr::Kind;

bool is_c2(const Expr& e) {
  return (e.kind == K::Chain && e.k == 2) || (e.kind == K::Bool && e.k == 1);
}

Expr fold(K kind, const std::vector<Expr>& parts) {
  Expr e = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) e = Expr::node(kind, e, parts[i]);
  return e;
}

void flatten(const Expr& e, K kind, std::vector<Expr>& out) {
  if (e.kind == kind) {
    for (const auto& k : e.kids) flatten(k, kind, out);
  } else {
    out.push_back(e);
  }
}

std::optional<Expr> name_rec(const FiniteLattice& L);

// Components between consecutive cut points (elements comparable to everything).
std::optional<Expr> name_ordinal(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<int> cuts;
  for (int x : L.linear_extension()) {
    bool all = true;
    for (int y = 0; y < n && all; ++y) all = L.comparable(x, y);
    if (all) cuts.push_back(x);
  }
  if (cuts.size() <= 2) return std::nullopt;
  std::sort(cuts.begin(), cuts.end(), [&](int a, int b) { return L.lt(a, b); });
  std::vector<Expr> parts;
  int run = 0;  // pending chain length in covers
  auto flush = [&] {
    if (run) parts.push_back(Expr::leaf(K::Chain, run + 1));
    run = 0;
  };
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    FiniteLattice part = interval(L, cuts[i], cuts[i + 1]);
    if (part.size() == 2) {
      ++run;
      continue;
    }
    flush();
    auto e = name_rec(part);
    if (!e) return std::nullopt;
    parts.push_back(*e);
  }
  flush();
  if (parts.size() == 1) return parts[0];
  return fold(K::OSum, parts);
}

std::optional<Expr> name_product(const FiniteLattice& L) {
  const int n = L.size();
  auto con = all_congruences(L);
  for (const auto& t : con.congruences) {
    int bt = t.num_blocks();
    if (bt == 1 || bt == n || n % bt) continue;
    for (const auto& f : con.congruences) {
      if (f.num_blocks() * bt != n || !meet(t, f).is_identity()) continue;
      auto a = name_rec(quotient(L, t).lattice);
      auto b = name_rec(quotient(L, f).lattice);
      if (!a || !b) return std::nullopt;
      std::vector<Expr> fs, rest;
      flatten(*a, K::Product, fs);
      flatten(*b, K::Product, fs);
      int bools = 0;
      for (auto& x : fs) {
        if (is_c2(x))
          ++bools;
        else if (x.kind == K::Bool)
          bools += x.k;
        else
          rest.push_back(x);
      }
      std::sort(rest.begin(), rest.end(),
                [](const Expr& x, const Expr& y) { return to_string(x) < to_string(y); });
      if (bools) rest.insert(rest.begin(), Expr::leaf(K::Bool, bools));
      return fold(K::Product, rest);
    }
  }
  return std::nullopt;
}

std::optional<Expr> name_horizontal(const FiniteLattice& L) {
  const int n = L.size(), bot = L.bottom(), top = L.top();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (s == bot || s == top || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (y != bot && y != top && comp[y] < 0 && L.comparable(x, y)) {
          comp[y] = nc;
          stack.push_back(y);
        }
    }
    ++nc;
  }
  if (nc < 2) return std::nullopt;
  std::vector<Expr> parts;
  int singles = 0;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> elems{bot};
    for (int x = 0; x < n; ++x)
      if (comp[x] == c) elems.push_back(x);
    elems.push_back(top);
    if (elems.size() == 3) {
      ++singles;
      continue;
    }
    auto e = name_rec(induced(L, elems));
    if (!e) return std::nullopt;
    parts.push_back(*e);
  }
  if (parts.empty()) return singles == 2 ? Expr::leaf(K::Bool, 2) : Expr::leaf(K::MKappa, singles);
  if (parts.size() == 1 && singles == 1 && parts[0].kind == K::Chain && parts[0].k == 4)
    return Expr::leaf(K::N5);
  std::sort(parts.begin(), parts.end(),
            [](const Expr& x, const Expr& y) { return to_string(x) < to_string(y); });
  for (int i = 0; i < singles; ++i) parts.insert(parts.begin(), Expr::leaf(K::Chain, 3));
  return fold(K::HSum, parts);
}

std::optional<Expr> name_rec(const FiniteLattice& L) {
  const int n = L.size();
  bool chain_like = true;
  for (int x = 0; x < n && chain_like; ++x)
    for (int y = 0; y < n && chain_like; ++y) chain_like = L.comparable(x, y);
  if (chain_like) return n == 2 ? Expr::leaf(K::Bool, 1) : Expr::leaf(K::Chain, n);
  if (auto e = name_ordinal(L)) return e;
  if (auto e = name_product(L)) return e;
  return name_horizontal(L);
}

int prec(const Expr& e) {
  switch (e.kind) {
    case K::OSum: return 0;
    case K::HSum: return 1;
    case K::Product: return 2;
    default: return 3;
  }
}

}  // namespace

std::optional<Expr> name_shape(const FiniteLattice& L) {
  std::optional<Expr> e;
  try {
    e = name_rec(L);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!e || !are_isomorphic(eval(*e), L)) return std::nullopt;
  return e;
}

std::string pretty(const Expr& e) {
  auto sub = [&](const Expr& k, int p) {
    std::string s = pretty(k);
    return prec(k) < p ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case K::Chain: return "C" + std::to_string(e.k);
    case K::Bool: return e.k == 0 ? "C1" : e.k == 1 ? "C2" : "C2^" + std::to_string(e.k);
    case K::MKappa: return "M" + std::to_string(e.k);
    case K::N5: return "N5";
    case K::Product: return sub(e.kids[0], 2) + " x " + sub(e.kids[1], 3);
    case K::OSum: return sub(e.kids[0], 0) + " (+) " + sub(e.kids[1], 0);
    case K::HSum: return sub(e.kids[0], 1) + " [+] " + sub(e.kids[1], 2);
    case K::Dual: return "dual(" + pretty(e.kids[0]) + ")";
    case K::Interval: return to_string(e);
  }
  return to_string(e);
}

}  // namespace latt

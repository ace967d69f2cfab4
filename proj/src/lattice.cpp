#include "latt/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace latt {

const char* kind_name(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::TrivialSummand: return "TrivialSummand";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::FullCongruenceInHsum: return "FullCongruenceInHsum";
    case ErrorKind::BadElements: return "BadElements";
    case ErrorKind::NotDeltaPreserving: return "NotDeltaPreserving";
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

int row_popcount(const BoolMatrix& m, int x) {
  int c = 0;
  const uint64_t* r = m.row(x);
  for (int i = 0; i < m.words_per_row(); ++i) c += std::popcount(r[i]);
  return c;
}

bool row_subset(const uint64_t* a, const uint64_t* b, int words) {
  for (int i = 0; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

// Least element z of {z : z in set}, where `set` is given as a word row and
// `cone` holds for each z the set of elements >= z (so z is least iff set ⊆ cone(z)).
int least_of(const std::vector<uint64_t>& set, const BoolMatrix& cone,
             const std::vector<int>& cone_size) {
  int best = -1;
  int best_size = -1;
  for (size_t w = 0; w < set.size(); ++w) {
    uint64_t bits = set[w];
    while (bits) {
      int z = int(w * 64) + std::countr_zero(bits);
      bits &= bits - 1;
      if (cone_size[z] > best_size) {
        best_size = cone_size[z];
        best = z;
      }
    }
  }
  if (best < 0) return -1;
  return row_subset(set.data(), cone.row(best), int(set.size())) ? best : -1;
}

}  // namespace

FiniteLattice FiniteLattice::validate(const BoolMatrix& leq) {
  const int n = leq.size();
  if (n < 1) throw Error(ErrorKind::NotAPartialOrder, "empty order");
  if (n > kMaxSize)
    throw Error(ErrorKind::CapExceeded, "lattice size " + std::to_string(n) + " exceeds 4096");
  FiniteLattice L;
  L.n_ = n;
  L.up_ = leq;
  L.down_ = BoolMatrix(n);
  for (int x = 0; x < n; ++x) {
    if (!leq.get(x, x)) throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + std::to_string(x));
    for (int y = 0; y < n; ++y)
      if (leq.get(x, y)) L.down_.set(y, x);
  }
  const int W = leq.words_per_row();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y)
      if (leq.get(x, y) && leq.get(y, x))
        throw Error(ErrorKind::NotAPartialOrder,
                    "not antisymmetric at " + std::to_string(x) + "," + std::to_string(y));
    // transitivity: for each y >= x, [y) ⊆ [x)
    for (int y = 0; y < n; ++y)
      if (leq.get(x, y) && !row_subset(leq.row(y), leq.row(x), W))
        throw Error(ErrorKind::NotAPartialOrder, "not transitive through " + std::to_string(y));
  }
  std::vector<int> upsize(n), downsize(n);
  for (int x = 0; x < n; ++x) {
    upsize[x] = row_popcount(L.up_, x);
    downsize[x] = row_popcount(L.down_, x);
  }
  L.bot_ = L.top_ = -1;
  for (int x = 0; x < n; ++x) {
    if (upsize[x] == n) L.bot_ = x;
    if (downsize[x] == n) L.top_ = x;
  }
  if (L.bot_ < 0 || L.top_ < 0) throw Error(ErrorKind::Unbounded, "order has no least or greatest element");

  L.meet_.assign(size_t(n) * n, 0);
  L.join_.assign(size_t(n) * n, 0);
  std::vector<uint64_t> tmp(W);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      const uint64_t* dx = L.down_.row(x);
      const uint64_t* dy = L.down_.row(y);
      for (int i = 0; i < W; ++i) tmp[i] = dx[i] & dy[i];
      // greatest lower bound: the lower bound z whose down-set contains all lower bounds
      int m = least_of(tmp, L.down_, downsize);
      const uint64_t* ux = L.up_.row(x);
      const uint64_t* uy = L.up_.row(y);
      for (int i = 0; i < W; ++i) tmp[i] = ux[i] & uy[i];
      int j = least_of(tmp, L.up_, upsize);
      if (m < 0 || j < 0)
        throw Error(ErrorKind::NotALattice,
                    "pair " + std::to_string(x) + "," + std::to_string(y) + " lacks a glb or lub");
      L.meet_[size_t(x) * n + y] = L.meet_[size_t(y) * n + x] = m;
      L.join_[size_t(x) * n + y] = L.join_[size_t(y) * n + x] = j;
    }
  }

  L.linext_.resize(n);
  std::iota(L.linext_.begin(), L.linext_.end(), 0);
  std::stable_sort(L.linext_.begin(), L.linext_.end(),
                   [&](int a, int b) { return downsize[a] < downsize[b]; });

  L.lower_.assign(n, {});
  L.upper_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq.get(x, y)) continue;
      // x < y is a cover iff [x) ∩ (y] = {x, y}
      int c = 0;
      const uint64_t* ux = L.up_.row(x);
      const uint64_t* dy = L.down_.row(y);
      for (int i = 0; i < W; ++i) c += std::popcount(ux[i] & dy[i]);
      if (c == 2) {
        L.upper_[x].push_back(y);
        L.lower_[y].push_back(x);
      }
    }
  }
  L.height_.assign(n, 0);
  for (int x : L.linext_)
    for (int y : L.lower_[x]) L.height_[x] = std::max(L.height_[x], L.height_[y] + 1);
  L.depth_.assign(n, 0);
  for (auto it = L.linext_.rbegin(); it != L.linext_.rend(); ++it)
    for (int y : L.upper_[*it]) L.depth_[*it] = std::max(L.depth_[*it], L.depth_[y] + 1);
  return L;
}

FiniteLattice FiniteLattice::from_covers(int n, const std::vector<std::pair<int, int>>& cov) {
  if (n < 1) throw Error(ErrorKind::NotAPartialOrder, "n must be >= 1");
  if (n > kMaxSize)
    throw Error(ErrorKind::CapExceeded, "lattice size " + std::to_string(n) + " exceeds 4096");
  std::vector<std::vector<int>> succ(n);
  for (auto [a, b] : cov) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw Error(ErrorKind::NotAPartialOrder, "bad cover pair");
    succ[a].push_back(b);
  }
  // reflexive-transitive closure by DFS from every vertex
  BoolMatrix leq(n);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    leq.set(s, s);
    stack.assign(1, s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : succ[x]) {
        if (y == s) throw Error(ErrorKind::NotAPartialOrder, "cover relation has a cycle");
        if (!leq.get(s, y)) {
          leq.set(s, y);
          stack.push_back(y);
        }
      }
    }
  }
  return validate(leq);
}

bool FiniteLattice::covers(int a, int b) const {
  const auto& u = upper_[a];
  return std::find(u.begin(), u.end(), b) != u.end();
}

ElementSet FiniteLattice::principal_ideal(int x) const {
  ElementSet s(n_);
  for (int y = 0; y < n_; ++y)
    if (leq(y, x)) s.insert(y);
  return s;
}

ElementSet FiniteLattice::principal_filter(int x) const {
  ElementSet s(n_);
  for (int y = 0; y < n_; ++y)
    if (leq(x, y)) s.insert(y);
  return s;
}

std::vector<std::pair<int, int>> covers(const FiniteLattice& L) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < L.size(); ++x)
    for (int y : L.upper_covers(x)) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet join_irreducibles(const FiniteLattice& L) {
  ElementSet s(L.size());
  for (int x = 0; x < L.size(); ++x)
    if (L.lower_covers(x).size() == 1) s.insert(x);
  return s;
}

ElementSet meet_irreducibles(const FiniteLattice& L) {
  ElementSet s(L.size());
  for (int x = 0; x < L.size(); ++x)
    if (L.upper_covers(x).size() == 1) s.insert(x);
  return s;
}

ElementSet atoms(const FiniteLattice& L) {
  ElementSet s(L.size());
  for (int x : L.upper_covers(L.bottom())) s.insert(x);
  return s;
}

ElementSet coatoms(const FiniteLattice& L) {
  ElementSet s(L.size());
  for (int x : L.lower_covers(L.top())) s.insert(x);
  return s;
}

FiniteLattice dual(const FiniteLattice& L) { return FiniteLattice::validate(L.down_matrix()); }

FiniteLattice induced(const FiniteLattice& L, const std::vector<int>& elems) {
  const int m = int(elems.size());
  BoolMatrix leq(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq.set(i, j, L.leq(elems[i], elems[j]));
  return FiniteLattice::validate(leq);
}

FiniteLattice interval(const FiniteLattice& L, int a, int b, std::vector<int>* index_map) {
  if (!L.leq(a, b))
    throw Error(ErrorKind::NotComparable, std::to_string(a) + " is not below " + std::to_string(b));
  std::vector<int> elems;
  for (int x = 0; x < L.size(); ++x)
    if (L.leq(a, x) && L.leq(x, b)) elems.push_back(x);
  if (index_map) *index_map = elems;
  return induced(L, elems);
}

FiniteLattice relabel(const FiniteLattice& L, const std::vector<int>& perm) {
  const int n = L.size();
  BoolMatrix leq(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.leq(x, y)) leq.set(perm[x], perm[y]);
  return FiniteLattice::validate(leq);
}

bool is_isomorphism(const FiniteLattice& L, const FiniteLattice& M, const std::vector<int>& f) {
  const int n = L.size();
  if (M.size() != n || int(f.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int x : f) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.leq(x, y) != M.leq(f[x], f[y])) return false;
  return true;
}

std::vector<std::string> element_labels(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<std::string> lab(n);
  if (n == 1) {
    lab[0] = "0";
    return lab;
  }
  std::vector<int> order;
  for (int x = 0; x < n; ++x)
    if (x != L.bottom() && x != L.top()) order.push_back(x);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return L.height(a) < L.height(b); });
  lab[L.bottom()] = "0";
  lab[L.top()] = "1";
  for (size_t i = 0; i < order.size(); ++i) lab[order[i]] = "a" + std::to_string(i + 1);
  return lab;
}

std::string to_dot(const FiniteLattice& L, const std::vector<std::string>* labels) {
  std::vector<std::string> own;
  if (!labels) {
    own = element_labels(L);
    labels = &own;
  }
  std::string s = "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  int maxh = 0;
  for (int x = 0; x < L.size(); ++x) maxh = std::max(maxh, L.height(x));
  for (int h = 0; h <= maxh; ++h) {
    s += "  { rank=same;";
    for (int x = 0; x < L.size(); ++x)
      if (L.height(x) == h) s += " n" + std::to_string(x) + ";";
    s += " }\n";
  }
  for (int x = 0; x < L.size(); ++x)
    s += "  n" + std::to_string(x) + " [label=\"" + (*labels)[x] + "\"];\n";
  for (auto [a, b] : covers(L))
    s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [arrowhead=none];\n";
  s += "}\n";
  return s;
}

}  // namespace latt

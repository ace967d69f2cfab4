#include "latt/constructions.hpp"

#include <cctype>

namespace latt {

FiniteLattice chain(int k) {
  if (k < 1) throw Error(ErrorKind::BadElements, "chain needs k >= 1");
  BoolMatrix leq(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) leq.set(i, j);
  return FiniteLattice::validate(leq);
}

FiniteLattice boolean(int k) {
  if (k < 0 || k > 12) throw Error(ErrorKind::CapExceeded, "boolean(k) needs 0 <= k <= 12");
  const int n = 1 << k;
  BoolMatrix leq(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i & j) == i) leq.set(i, j);
  return FiniteLattice::validate(leq);
}

FiniteLattice m_kappa(int k) {
  if (k < 1) throw Error(ErrorKind::BadElements, "m_kappa needs k >= 1");
  const int n = k + 2;
  BoolMatrix leq(n);
  for (int i = 0; i < n; ++i) {
    leq.set(i, i);
    leq.set(0, i);
    leq.set(i, n - 1);
  }
  return FiniteLattice::validate(leq);
}

FiniteLattice n5() { return FiniteLattice::from_covers(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}}); }

std::vector<int> osum_right_embedding(const FiniteLattice& L, const FiniteLattice& M) {
  std::vector<int> f(M.size());
  int next = L.size();
  for (int y = 0; y < M.size(); ++y) f[y] = (y == M.bottom()) ? L.top() : next++;
  return f;
}

std::vector<int> hsum_right_embedding(const FiniteLattice& L, const FiniteLattice& M) {
  std::vector<int> f(M.size());
  int next = L.size();
  for (int y = 0; y < M.size(); ++y) {
    if (y == M.bottom())
      f[y] = L.bottom();
    else if (y == M.top())
      f[y] = L.top();
    else
      f[y] = next++;
  }
  return f;
}

FiniteLattice ordinal_sum(const FiniteLattice& L, const FiniteLattice& M) {
  const int n = L.size() + M.size() - 1;
  auto f = osum_right_embedding(L, M);
  BoolMatrix leq(n);
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      if (L.leq(x, y)) leq.set(x, y);
  for (int x = 0; x < M.size(); ++x)
    for (int y = 0; y < M.size(); ++y)
      if (M.leq(x, y)) leq.set(f[x], f[y]);
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < M.size(); ++y) leq.set(x, f[y]);
  return FiniteLattice::validate(leq);
}

FiniteLattice horizontal_sum(const FiniteLattice& L, const FiniteLattice& M) {
  if (L.size() < 2 || M.size() < 2)
    throw Error(ErrorKind::TrivialSummand, "horizontal sum needs summands with at least 2 elements");
  const int n = L.size() + M.size() - 2;
  auto f = hsum_right_embedding(L, M);
  BoolMatrix leq(n);
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      if (L.leq(x, y)) leq.set(x, y);
  for (int x = 0; x < M.size(); ++x)
    for (int y = 0; y < M.size(); ++y)
      if (M.leq(x, y)) leq.set(f[x], f[y]);
  for (int i = 0; i < n; ++i) {
    leq.set(L.bottom(), i);
    leq.set(i, L.top());
  }
  return FiniteLattice::validate(leq);
}

FiniteLattice product(const FiniteLattice& L, const FiniteLattice& M) {
  const int m = M.size();
  const int n = L.size() * m;
  if (n > FiniteLattice::kMaxSize) throw Error(ErrorKind::CapExceeded, "product exceeds 4096 elements");
  BoolMatrix leq(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (L.leq(p / m, q / m) && M.leq(p % m, q % m)) leq.set(p, q);
  return FiniteLattice::validate(leq);
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at position " + std::to_string(i) + " in \"" + s + "\"");
  }
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int number() {
    ws();
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("expected a number");
    if (i - st > 6) fail("number too large");
    return std::stoi(s.substr(st, i - st));
  }
  std::string word() {
    ws();
    size_t st = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) ++i;
    return s.substr(st, i - st);
  }

  Expr primary() {
    if (eat('(')) {
      Expr e = osum();
      expect(')');
      return e;
    }
    std::string w = word();
    if (w.empty()) fail("expected an expression");
    if (w == "n5") return Expr::leaf(Expr::Kind::N5);
    if (w == "dual") {
      expect('(');
      Expr e = osum();
      expect(')');
      return Expr{Expr::Kind::Dual, 0, 0, 0, {std::move(e)}};
    }
    if (w == "interval") {
      expect('(');
      Expr e = osum();
      expect(',');
      int a = number();
      expect(',');
      int b = number();
      expect(')');
      return Expr{Expr::Kind::Interval, 0, a, b, {std::move(e)}};
    }
    Expr::Kind kind;
    if (w == "chain")
      kind = Expr::Kind::Chain;
    else if (w == "bool")
      kind = Expr::Kind::Bool;
    else if (w == "mk")
      kind = Expr::Kind::MKappa;
    else
      fail("unknown leaf '" + w + "'");
    expect(':');
    int k = number();
    if (k < 1) fail("leaf parameter must be >= 1");
    return Expr::leaf(kind, k);
  }
  Expr prod() {
    Expr e = primary();
    while (eat('*')) e = Expr::node(Expr::Kind::Product, std::move(e), primary());
    return e;
  }
  Expr hsum() {
    Expr e = prod();
    while (eat('|')) e = Expr::node(Expr::Kind::HSum, std::move(e), prod());
    return e;
  }
  Expr osum() {
    Expr e = hsum();
    while (eat('+')) e = Expr::node(Expr::Kind::OSum, std::move(e), hsum());
    return e;
  }
};

}  // namespace

Expr parse_expr(const std::string& text) {
  Parser p{text};
  Expr e = p.osum();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return e;
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Chain: return "chain:" + std::to_string(e.k);
    case Expr::Kind::Bool: return "bool:" + std::to_string(e.k);
    case Expr::Kind::MKappa: return "mk:" + std::to_string(e.k);
    case Expr::Kind::N5: return "n5";
    case Expr::Kind::Product: return "(" + to_string(e.kids[0]) + " * " + to_string(e.kids[1]) + ")";
    case Expr::Kind::OSum: return "(" + to_string(e.kids[0]) + " + " + to_string(e.kids[1]) + ")";
    case Expr::Kind::HSum: return "(" + to_string(e.kids[0]) + " | " + to_string(e.kids[1]) + ")";
    case Expr::Kind::Dual: return "dual(" + to_string(e.kids[0]) + ")";
    case Expr::Kind::Interval:
      return "interval(" + to_string(e.kids[0]) + "," + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
  }
  return "";
}

FiniteLattice eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Chain: return chain(e.k);
    case Expr::Kind::Bool: return boolean(e.k);
    case Expr::Kind::MKappa: return m_kappa(e.k);
    case Expr::Kind::N5: return n5();
    case Expr::Kind::Product: return product(eval(e.kids[0]), eval(e.kids[1]));
    case Expr::Kind::OSum: return ordinal_sum(eval(e.kids[0]), eval(e.kids[1]));
    case Expr::Kind::HSum: return horizontal_sum(eval(e.kids[0]), eval(e.kids[1]));
    case Expr::Kind::Dual: return dual(eval(e.kids[0]));
    case Expr::Kind::Interval: {
      FiniteLattice L = eval(e.kids[0]);
      if (e.a >= L.size() || e.b >= L.size()) throw Error(ErrorKind::BadElements, "interval bound out of range");
      return interval(L, e.a, e.b);
    }
  }
  throw Error(ErrorKind::Parse, "bad expression");
}

FiniteLattice eval(const std::string& text) { return eval(parse_expr(text)); }

}  // namespace latt

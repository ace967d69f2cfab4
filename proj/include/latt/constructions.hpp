#pragma once

#include <memory>
#include <string>
#include <vector>

#include "latt/lattice.hpp"

namespace latt {

FiniteLattice chain(int k);
FiniteLattice boolean(int k);   // C_2^k, element i is the subset with bitmask i
FiniteLattice m_kappa(int k);   // 0, k atoms 1..k, top k+1
FiniteLattice n5();             // 0, a, b, c, 1 with 0 < a < 1 and 0 < b < c < 1

// Indexing: the left operand keeps its indices; the right operand's non-glued
// elements follow in increasing index order.
FiniteLattice ordinal_sum(const FiniteLattice& L, const FiniteLattice& M);
FiniteLattice horizontal_sum(const FiniteLattice& L, const FiniteLattice& M);
FiniteLattice product(const FiniteLattice& L, const FiniteLattice& M);  // (x,y) -> x*|M|+y

// Index of each operand element inside the sum.
std::vector<int> osum_right_embedding(const FiniteLattice& L, const FiniteLattice& M);
std::vector<int> hsum_right_embedding(const FiniteLattice& L, const FiniteLattice& M);

struct Expr {
  enum class Kind { Chain, Bool, MKappa, N5, Product, OSum, HSum, Dual, Interval };
  Kind kind = Kind::Chain;
  int k = 1;      // leaf parameter
  int a = 0, b = 0;  // interval bounds
  std::vector<Expr> kids;

  static Expr leaf(Kind kind, int k = 1) { return Expr{kind, k, 0, 0, {}}; }
  static Expr node(Kind kind, Expr l, Expr r) { return Expr{kind, 0, 0, 0, {std::move(l), std::move(r)}}; }
};

// Grammar: chain:K  bool:K  mk:K  n5  dual(E)  interval(E,a,b)  and infix
// '*' (product) binding tighter than '|' (horizontal sum) binding tighter than '+' (ordinal sum).
Expr parse_expr(const std::string& text);
std::string to_string(const Expr& e);
FiniteLattice eval(const Expr& e);
FiniteLattice eval(const std::string& text);

}  // namespace latt

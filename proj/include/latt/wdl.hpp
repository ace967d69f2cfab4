#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latt/congruence.hpp"
#include "latt/lattice.hpp"

namespace latt {

// Total map L -> L; used for Δ and ∇ tables.
using UnaryOp = std::vector<int>;

struct DicompLattice {
  FiniteLattice lattice;
  UnaryOp delta;
  UnaryOp nabla;
};

// First violated axiom, or none.
std::optional<std::string> wcl_violation(const FiniteLattice& L, const UnaryOp& d);
std::optional<std::string> wdcl_violation(const FiniteLattice& L, const UnaryOp& d);
inline bool is_weak_complementation(const FiniteLattice& L, const UnaryOp& d) {
  return !wcl_violation(L, d);
}
inline bool is_dual_weak_complementation(const FiniteLattice& L, const UnaryOp& d) {
  return !wdcl_violation(L, d);
}
bool is_dicomplementation(const FiniteLattice& L, const UnaryOp& delta, const UnaryOp& nabla);

UnaryOp trivial_delta(const FiniteLattice& L);
UnaryOp trivial_nabla(const FiniteLattice& L);
bool is_trivial_delta(const FiniteLattice& L, const UnaryOp& d);
bool is_trivial_nabla(const FiniteLattice& L, const UnaryOp& d);

// 1 -> 0, a -> b, b -> a, everything else -> 1; none if not a weak complementation.
std::optional<UnaryOp> delta_ab(const FiniteLattice& L, int a, int b);
// 0 -> 1, a -> b, b -> a, everything else -> 0; none if not a dual weak complementation.
std::optional<UnaryOp> nabla_ab(const FiniteLattice& L, int a, int b);

// All weak complementations, sorted lexicographically by table.
std::vector<UnaryOp> enumerate_weak_complementations(const FiniteLattice& L);
std::vector<UnaryOp> enumerate_dual_weak_complementations(const FiniteLattice& L);
std::vector<DicompLattice> enumerate_dicomplementations(const FiniteLattice& L);

bool is_join_dense(const FiniteLattice& L, const ElementSet& J);
bool is_meet_dense(const FiniteLattice& L, const ElementSet& M);
// x -> join of J \ (x]; none if J is not join-dense.
std::optional<UnaryOp> delta_from_join_dense(const FiniteLattice& L, const ElementSet& J);
// x -> meet of M \ [x); none if M is not meet-dense.
std::optional<UnaryOp> nabla_from_meet_dense(const FiniteLattice& L, const ElementSet& M);

// Witness J with Ji(L) ⊆ J ⊆ L \ {0} and Δ = Δ^J, smallest first.
std::optional<ElementSet> is_representable(const FiniteLattice& L, const UnaryOp& delta);
std::optional<ElementSet> is_dual_representable(const FiniteLattice& L, const UnaryOp& nabla);

bool has_nontrivial_delta(const FiniteLattice& L);
bool has_nontrivial_nabla(const FiniteLattice& L);

bool preserves(const Congruence& t, const UnaryOp& op);
std::vector<Congruence> filter_preserving(const std::vector<Congruence>& cs, const UnaryOp& op);
ConLattice con_wcl(const FiniteLattice& L, const UnaryOp& delta);
ConLattice con_wdcl(const FiniteLattice& L, const UnaryOp& nabla);
ConLattice con_wdl(const DicompLattice& D);

struct OpQuotient {
  FiniteLattice lattice;
  UnaryOp op;
  std::vector<int> projection;
};
OpQuotient quotient_wcl(const FiniteLattice& L, const UnaryOp& delta, const Congruence& t);

Congruence principal_wcl_congruence(const FiniteLattice& L, const UnaryOp& delta, int a, int b);

bool is_subuniverse_wcl(const FiniteLattice& L, const UnaryOp& delta, const ElementSet& part);

// Lattice JSON plus optional "delta" / "nabla" arrays.
struct Algebra {
  FiniteLattice lattice;
  std::optional<UnaryOp> delta;
  std::optional<UnaryOp> nabla;
};
std::string to_json(const Algebra& a);
Algebra algebra_from_json(const std::string& text);

}  // namespace latt

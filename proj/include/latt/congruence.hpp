#pragma once

#include <string>
#include <vector>

#include "latt/lattice.hpp"

namespace latt {

// Partition of 0..n-1; block_of[x] is the least member of x's block.
struct Congruence {
  std::vector<int> block_of;

  int size() const noexcept { return int(block_of.size()); }
  bool same(int x, int y) const noexcept { return block_of[x] == block_of[y]; }
  int num_blocks() const;
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block(int x) const;
  bool is_identity() const;
  bool is_full() const;

  bool operator==(const Congruence&) const = default;
  auto operator<=>(const Congruence&) const = default;
};

Congruence identity_congruence(int n);
Congruence full_congruence(int n);
// Normalizes an arbitrary labelling (equal labels = same block).
Congruence from_labels(const std::vector<int>& labels);
// Equivalence with the given pairwise disjoint sets as classes, other classes singletons.
Congruence eps(int n, const std::vector<std::vector<int>>& sets);
Congruence eps(const FiniteLattice& L, const ElementSet& S);

bool refines(const Congruence& a, const Congruence& b);  // a ⊆ b
Congruence meet(const Congruence& a, const Congruence& b);
Congruence join(const Congruence& a, const Congruence& b);  // transitive closure of the union

bool is_congruence(const FiniteLattice& L, const Congruence& t);

// Smallest congruence containing `seed`; if `op` is non-null it is also forced
// to be preserved (x ≡ y implies op[x] ≡ op[y]).
Congruence congruence_closure(const FiniteLattice& L, const Congruence& seed,
                              const std::vector<int>* op = nullptr,
                              const std::vector<int>* op2 = nullptr);
Congruence principal_congruence(const FiniteLattice& L, int a, int b);

struct ConLattice {
  std::vector<Congruence> congruences;  // identity first, full last
  FiniteLattice order;                  // element i is congruences[i]
  int size() const noexcept { return int(congruences.size()); }
  int index_of(const Congruence& t) const;  // -1 if absent
};

// Sorts the set (fewest-merged first) and builds the refinement order.
ConLattice make_con_lattice(std::vector<Congruence> cs);
ConLattice all_congruences(const FiniteLattice& L);
std::vector<Congruence> con_filtered(const FiniteLattice& L, bool fix_bottom, bool fix_top);
std::vector<Congruence> filter_singleton(const std::vector<Congruence>& cs, int x);

struct Quotient {
  FiniteLattice lattice;
  std::vector<int> projection;  // element -> block index (blocks ordered by least member)
};
Quotient quotient(const FiniteLattice& L, const Congruence& t);

Congruence osum_congruence(const FiniteLattice& L, const FiniteLattice& M, const Congruence& a,
                           const Congruence& b);
Congruence hsum_congruence(const FiniteLattice& L, const FiniteLattice& M, const Congruence& a,
                           const Congruence& b);

bool is_subdirectly_irreducible(const ConLattice& c);

std::string to_json(const Congruence& t);
Congruence congruence_from_json(const std::string& text, int n);

}  // namespace latt

#pragma once

#include <string>
#include <vector>

#include "latt/element_set.hpp"
#include "latt/lattice.hpp"
#include "latt/wdl.hpp"

namespace latt {

struct FormalContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<ElementSet> rows;  // rows[g] = attributes of object g

  int num_objects() const noexcept { return int(objects.size()); }
  int num_attributes() const noexcept { return int(attributes.size()); }
  bool incident(int g, int m) const { return rows[g].contains(m); }
};

struct Concept {
  ElementSet extent;
  ElementSet intent;
  bool operator==(const Concept&) const = default;
};

// Throws Parse on duplicate labels or malformed rows.
void check_context(const FormalContext& ctx);

ElementSet derive_objects(const FormalContext& ctx, const ElementSet& A);     // A' ⊆ M
ElementSet derive_attributes(const FormalContext& ctx, const ElementSet& B);  // B' ⊆ G

struct ConceptLattice {
  FiniteLattice lattice;
  std::vector<Concept> concepts;  // lectic order of extents
  int index_of_extent(const ElementSet& A) const;
};

constexpr int kContextCap = 1024;
ConceptLattice concept_lattice(const FormalContext& ctx);
DicompLattice concept_algebra(const FormalContext& ctx, ConceptLattice* out = nullptr);

// (Ji(L), Mi(L), <=), labelled with element_labels(L).
FormalContext standard_context(const FiniteLattice& L);
// Element indices behind the objects / attributes of standard_context(L).
std::vector<int> standard_objects(const FiniteLattice& L);
std::vector<int> standard_attributes(const FiniteLattice& L);
// x -> index of the concept (Ji ∩ (x], Mi ∩ [x)).
std::vector<int> standard_embedding(const FiniteLattice& L, const ConceptLattice& C);

FormalContext read_cxt(const std::string& text);
std::string write_cxt(const FormalContext& ctx);
FormalContext read_csv_context(const std::string& text);

}  // namespace latt

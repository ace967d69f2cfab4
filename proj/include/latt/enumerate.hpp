#pragma once

#include <string>
#include <vector>

#include "latt/lattice.hpp"
#include "latt/wdl.hpp"

namespace latt {

struct LatticeCatalog {
  int n = 0;
  std::vector<FiniteLattice> lattices;  // canonical representatives, sorted by certificate
  int size() const noexcept { return int(lattices.size()); }
};

constexpr int kEnumCap = 9;

// Every n-element lattice up to isomorphism. Throws CapExceeded for n > 9.
LatticeCatalog enumerate_lattices(int n);
// Memoized across calls in the process.
const LatticeCatalog& catalog(int n);

struct WclAlgebra {
  int lattice_index;  // into catalog(n)
  UnaryOp delta;
};
// All (lattice, Δ) pairs, Δ in enumerate_weak_complementations order.
std::vector<WclAlgebra> enumerate_wcl_algebras(int n);

// One JSON lattice per line.
std::string catalog_to_jsonl(const LatticeCatalog& c);
LatticeCatalog catalog_from_jsonl(const std::string& text);

}  // namespace latt

#pragma once

#include <optional>
#include <string>

#include "latt/constructions.hpp"

namespace latt {

// Names L up to isomorphism as ordinal sums, direct products and horizontal sums
// of chains, Boolean lattices, M_k and N_5. The result is checked with are_isomorphic;
// none if no decomposition was found.
std::optional<Expr> name_shape(const FiniteLattice& L);

// Human form, e.g. "C2^3 (+) C2", "(C2 x C3) (+) C2", "C3 [+] C4".
std::string pretty(const Expr& e);

}  // namespace latt

#pragma once

#include "chern4/chern.hpp"
#include "chern4/lattice.hpp"

#include <string>

namespace chern4 {

/// Degree-2 class in generator notation when the lattice supports it:
/// rank 1 uses the generator a ("3a", "-a", "0"); the rank-2 hyperbolic
/// plane uses a, b ("2a + 2b"). Anything else falls back to the coordinate
/// form "[x1, x2, ...]".
std::string render_class(const IntersectionLattice& l, const CohClass& c);

/// Chern polynomial 1 + c1 + c2 in the same notation, e.g. "1 - 3a + 3a^2"
/// over CP2 or "1 + 2a + 2b + 4ab" over the hyperbolic plane. The H^4
/// coefficient is produced by exact division by the generator's square; when
/// that fails (or the lattice has rank > 2) the fallback is
/// "rank=r c1=[...] c2=n".
std::string render_chern(const IntersectionLattice& l, const ChernData& d);

} // namespace chern4

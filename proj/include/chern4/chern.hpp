#pragma once

#include "chern4/enumeration.hpp"
#include "chern4/lattice.hpp"
#include "chern4/manifold.hpp"

#include <cstddef>
#include <vector>

namespace chern4 {

/// Truncated Chern polynomial of a complex bundle over a closed oriented
/// 4-manifold: 1 + c1 + c2 with c1 in H^2 and c2 already paired with the
/// fundamental class (H^4 = Z). Nothing above degree 4 survives.
struct ChernData {
    std::size_t rank = 0;  // complex rank of the bundle
    CohClass c1;
    Int c2 = 0;

    bool operator==(const ChernData&) const = default;
};

// Ordering for deduplication and deterministic output: (rank, c1, c2).
bool operator<(const ChernData& a, const ChernData& b);

/// c(E + F) = c(E)c(F), truncated: rank adds, c1 adds, and
/// c2 = a.c2 + b.c2 + pair(a.c1, b.c1).
ChernData whitney_product(const IntersectionLattice& l, const ChernData& a,
                          const ChernData& b);

/// Conjugate bundle: c1 flips sign, c2 is preserved. An involution.
ChernData conjugate(const ChernData& d);

/// Chern data of TM + T*M for an honest complex structure, computed as the
/// square of the Chern polynomial of the holomorphic cotangent bundle.
/// `c1_holo` is c1(T*^{1,0}) = -c1(T^{1,0}); c2 of either dual bundle is chi.
ChernData complex_structure_chTM(const IntersectionLattice& l, const CohClass& c1_holo,
                                 const Int& chi);

/// Chern data of TM + T*M for the generalized complex structure induced by a
/// symplectic form with compatible almost complex structure: the product of
/// (2, c1_ac, chi) with its conjugate. c1 always cancels.
ChernData symplectic_chTM(const IntersectionLattice& l, const CohClass& c1_ac,
                          const Int& chi);

enum class GcKind { J1, J2 };

/// The two generalized complex structures determined by a pair of rank-2
/// Chern data for the +/- eigenbundle splitting:
/// J1 = plus * minus, J2 = plus * conjugate(minus).
ChernData gc_chTM_from_pair(const IntersectionLattice& l, const ChernData& plus,
                            const ChernData& minus, GcKind which);

/// Solution list of a Chern-data query together with the honesty flag
/// inherited from the underlying enumeration.
struct AdmissibleChern {
    std::vector<ChernData> values;
    Completeness completeness = Completeness::Complete;
};

/// All rank-2 Chern data admissible for an almost complex structure on M:
/// solutions of pair(c1,c1) = 3*sigma + 2*chi, c1 = w2 (mod 2), with c2 = chi.
AdmissibleChern admissible_ac_chern(const FourManifoldModel& m, const Int& window = 8);

/// All distinct J1 values over ordered pairs of admissible almost complex
/// Chern data, sorted. This is the Chern image of the generalized complex
/// moduli space at the level the intersection form can see.
AdmissibleChern gc_admissible_chern(const FourManifoldModel& m, const Int& window = 8);

/// Number of equivalence classes of `values` under conjugation.
std::size_t conjugation_class_count(const std::vector<ChernData>& values);

} // namespace chern4

#pragma once

#include "chern4/chern.hpp"
#include "chern4/lattice.hpp"
#include "chern4/manifold.hpp"

#include <string>
#include <vector>

namespace chern4 {

/// First Chern class of the canonical bundle of a generalized complex
/// structure. For a nondegenerate type-change locus S, c1K = -PD[S].
struct CanonicalClass {
    CohClass c1K;

    bool operator==(const CanonicalClass&) const = default;
};

/// c1(TM + T*M) = 2 c1(K): halves the degree-2 part of a rank-4 Chern datum.
/// An odd coordinate means the datum cannot come from a generalized complex
/// structure and raises InconsistencyError.
CanonicalClass canonical_from_chTM(const ChernData& d);

/// Canonical class after k multiplicity-one logarithmic transforms on the
/// fiber: c1K = -k * PD[F]. k = 0 is the untransformed symplectic structure.
CanonicalClass log_transform_canonical(const FourManifoldModel& m, const Int& k);

/// Diff(M) acts on H^2 through lattice automorphisms, so any automorphism
/// invariant separates Diff-orbits. Equal invariants prove nothing.
struct OrbitInvariants {
    Int square;         // pair(x, x)
    Int divisibility;   // gcd of pairings against the basis; 0 only for x = 0
    bool characteristic = false;
    bool primitive = false;  // gcd of the coordinates is 1

    bool operator==(const OrbitInvariants&) const = default;
};

OrbitInvariants orbit_invariants(const IntersectionLattice& l, const CohClass& x);

enum class OrbitVerdict { DistinctOrbits, Inconclusive };

/// DistinctOrbits iff some invariant differs. Inconclusive never asserts
/// that the orbits agree.
OrbitVerdict distinguish(const IntersectionLattice& l, const CohClass& x,
                         const CohClass& y);

struct InfinitudeEntry {
    Int k;
    CanonicalClass canonical;
    OrbitInvariants invariants;
};

/// Witness that the Chern image of the generalized complex moduli space
/// contains kmax + 1 values in pairwise distinct Diff-orbits: one entry per
/// number of log transforms, verified iff all invariant tuples differ.
struct InfinitudeCertificate {
    std::string manifold;
    std::vector<InfinitudeEntry> entries;
    bool verified = false;
};

InfinitudeCertificate infinite_components_certificate(const FourManifoldModel& m,
                                                      const Int& kmax);

enum class FinitenessVerdict { Finite, NotApplicable };

/// For definite forms: the complete finite list of generalized complex Chern
/// values, verdict `Finite`. Indefinite forms get `NotApplicable` plus the
/// windowed list for inspection.
struct FinitenessCertificate {
    std::string manifold;
    FinitenessVerdict verdict = FinitenessVerdict::NotApplicable;
    AdmissibleChern chern;
};

FinitenessCertificate finiteness_certificate(const FourManifoldModel& m,
                                             const Int& window = 8);

} // namespace chern4

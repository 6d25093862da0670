#include "chern4/moduli.hpp"

#include "chern4/errors.hpp"

namespace chern4 {

CanonicalClass canonical_from_chTM(const ChernData& d) {
    IntVec half(d.c1.size());
    for (std::size_t i = 0; i < d.c1.size(); ++i) {
        if (d.c1[i] % 2 != 0)
            throw InconsistencyError(
                "c1(TM + T*M) = " + d.c1.to_string() +
                " has an odd coordinate, so it is not twice a canonical class");
        half[i] = d.c1[i] / 2;
    }
    return CanonicalClass{CohClass(std::move(half))};
}

CanonicalClass log_transform_canonical(const FourManifoldModel& m, const Int& k) {
    if (!m.fiber)
        throw ModelError(m.name + " carries no fiber class; log transforms need one");
    if (k < 0) throw Error("log transform count must be non-negative");
    return CanonicalClass{*m.fiber * -k};
}

OrbitInvariants orbit_invariants(const IntersectionLattice& l, const CohClass& x) {
    OrbitInvariants inv;
    inv.square = l.pair(x, x);
    inv.divisibility = l.basis_pairings(x).content();
    inv.characteristic = l.is_characteristic(x);
    inv.primitive = x.content() == 1;
    return inv;
}

OrbitVerdict distinguish(const IntersectionLattice& l, const CohClass& x,
                         const CohClass& y) {
    return orbit_invariants(l, x) == orbit_invariants(l, y)
               ? OrbitVerdict::Inconclusive
               : OrbitVerdict::DistinctOrbits;
}

InfinitudeCertificate infinite_components_certificate(const FourManifoldModel& m,
                                                      const Int& kmax) {
    if (!m.fiber)
        throw ModelError(m.name + " carries no fiber class; the certificate needs one");
    if (kmax < 2) throw Error("kmax must be at least 2");
    if (m.fiber->is_zero() || m.lattice.pair(*m.fiber, *m.fiber) != 0)
        throw ModelError(m.name + ": fiber class must be nonzero with square zero");

    InfinitudeCertificate cert;
    cert.manifold = m.name;
    for (Int k = 0; k <= kmax; ++k) {
        InfinitudeEntry e;
        e.k = k;
        e.canonical = log_transform_canonical(m, k);
        e.invariants = orbit_invariants(m.lattice, *m.fiber * k);
        cert.entries.push_back(std::move(e));
    }
    cert.verified = true;
    for (std::size_t i = 0; i < cert.entries.size() && cert.verified; ++i)
        for (std::size_t j = i + 1; j < cert.entries.size(); ++j)
            if (cert.entries[i].invariants == cert.entries[j].invariants) {
                cert.verified = false;
                break;
            }
    return cert;
}

FinitenessCertificate finiteness_certificate(const FourManifoldModel& m,
                                             const Int& window) {
    FinitenessCertificate cert;
    cert.manifold = m.name;
    cert.chern = gc_admissible_chern(m, window);
    cert.verdict = cert.chern.completeness == Completeness::Complete
                       ? FinitenessVerdict::Finite
                       : FinitenessVerdict::NotApplicable;
    return cert;
}

} // namespace chern4

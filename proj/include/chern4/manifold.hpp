#pragma once

#include "chern4/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chern4 {

/// Topological model of a closed oriented 4-manifold: the data entering the
/// Chern constraints. Torsion in H^2 is outside the model; sigma is stored
/// for cross-checking but recomputable from the lattice.
struct FourManifoldModel {
    std::string name;
    IntersectionLattice lattice;
    Int euler = 0;
    Int sigma = 0;
    CohClass w2;                       // characteristic vector, read mod 2
    std::optional<CohClass> fiber;     // PD of a regular fiber, elliptic presets
    std::optional<CohClass> complex_c1;  // c1 of a reference complex structure

    /// 3*sigma + 2*euler, the square every admissible c1 must attain.
    Int chern_number_target() const { return 3 * sigma + 2 * euler; }

    /// Derived from euler = 2 + rank; exact for the presets, a guess for
    /// user-supplied models.
    bool simply_connected_profile() const {
        return euler == Int(2) + Int(lattice.rank());
    }
};

/// Named presets. Accepted spellings:
///   CP2, CP2bar, S2xS2, K3, E(n) or En with n >= 1,
///   mCP2_nCP2bar as in "2CP2_3CP2bar" (also "3CP2", "2CP2bar").
FourManifoldModel preset(const std::string& name);

/// The elliptic surface E(n), n >= 1. E(1) is CP2 blown up nine times,
/// E(2) is the K3 surface. chi = 12n, sigma = -8n.
FourManifoldModel elliptic_surface(const Int& n);

/// m CP2 # n CP2bar with m + n >= 1: diagonal form with m entries +1 and n
/// entries -1.
FourManifoldModel projective_plane_sum(const Int& m, const Int& n);

/// Connected sum of simply connected models: lattices add, chi drops by 2,
/// fiber and reference complex structure do not survive the sum.
FourManifoldModel connected_sum(const FourManifoldModel& a, const FourManifoldModel& b);

struct Diagnostic {
    std::string check;
    bool pass = false;
    std::string detail;
};

/// Runs every model invariant, one diagnostic per check:
/// lattice unimodularity, sigma recomputation, w2 characteristicness, the
/// mod 8 congruence sigma = pair(w2,w2), fiber isotropy, and the admissibility
/// of a declared reference complex structure.
std::vector<Diagnostic> validate(const FourManifoldModel& m);

bool all_pass(const std::vector<Diagnostic>& diags);

} // namespace chern4

#pragma once

#include "chern4/lattice.hpp"

#include <optional>
#include <vector>

namespace chern4 {

/// The quadratic Diophantine problem: all c in Z^m with pair(c,c) = target
/// and c = parity (mod 2). For almost complex structures on a 4-manifold the
/// instance is target = 3*sigma + 2*chi, parity = w_2.
struct EnumerationProblem {
    IntersectionLattice lattice;
    Int target;
    CohClass parity;     // entries read mod 2
    Int window = 8;      // per-coordinate bound, used only for indefinite forms

    EnumerationProblem(IntersectionLattice l, Int n, CohClass p, Int w = 8);
};

enum class Completeness { Complete, WindowTruncated };

/// Solution list plus an honesty flag. `complete` is reported exactly when
/// the lattice is definite (or of rank 0), where the radius bound makes the
/// search exhaustive; otherwise the list covers the window box only.
class EnumerationResult {
public:
    // Re-verifies every solution against both constraints; a violation is a
    // library bug and throws.
    EnumerationResult(const EnumerationProblem& p, std::vector<CohClass> solutions,
                      Completeness completeness);

    const std::vector<CohClass>& solutions() const { return solutions_; }
    Completeness completeness() const { return completeness_; }

    /// A nonzero isotropic solution when one was found (possible only for
    /// target 0 on an indefinite form). Advisory: it witnesses that the
    /// definite-case radius bound fails, never a completeness proof.
    const std::optional<CohClass>& infinitude_hint() const { return hint_; }

private:
    void verify_against(const EnumerationProblem& p) const;

    std::vector<CohClass> solutions_;
    Completeness completeness_;
    std::optional<CohClass> hint_;
};

/// Definite lattice: all solutions, found by branch-and-bound on the
/// rational LDL^T of the (possibly negated) Gram matrix. Indefinite lattice:
/// all solutions in the window box. Output is sorted lexicographically.
EnumerationResult enumerate_solutions(const EnumerationProblem& p);

/// Per-coordinate search bound for definite forms: the largest
/// floor(sqrt((Q^-1)_ii * |N|)) over i. For diagonal forms with entries of
/// absolute value >= 1 this reduces to floor(sqrt(|N|)), the radius bound of
/// the finiteness argument; the inverse-diagonal refinement covers
/// non-diagonal Gram matrices. Throws UnsupportedFormError when indefinite.
Int ball_bound(const EnumerationProblem& p);

/// Exhaustive scan of the full box [-window, window]^m filtered by both
/// constraints. Test oracle: deliberately independent of the branch-and-bound
/// path. Refuses rank > 6 or window > 10.
std::vector<CohClass> brute_force_oracle(const EnumerationProblem& p);

} // namespace chern4

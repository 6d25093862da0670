#pragma once

#include "chern4/numeric.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace chern4 {

/// Integer coordinate vector for a degree-2 cohomology class, written in a
/// fixed basis of H^2(M;Z)/Tor. Pure value type; lengths are checked by the
/// lattice at every pairing call.
class CohClass {
public:
    CohClass() = default;
    explicit CohClass(IntVec coords) : coords_(std::move(coords)) {}
    static CohClass zero(std::size_t rank) { return CohClass(IntVec(rank, 0)); }

    std::size_t size() const { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    const IntVec& coords() const { return coords_; }

    bool is_zero() const;

    CohClass operator+(const CohClass& o) const;
    CohClass operator-(const CohClass& o) const;
    CohClass operator-() const;
    CohClass operator*(const Int& k) const;

    bool operator==(const CohClass& o) const { return coords_ == o.coords_; }
    // Lexicographic coordinate order; used for deterministic output.
    std::strong_ordering operator<=>(const CohClass& o) const;

    // Entries reduced to {0,1}; two classes are congruent mod 2 iff their
    // reductions agree.
    CohClass mod2() const;
    bool congruent_mod2(const CohClass& o) const;

    // gcd of the coordinates (0 for the zero class).
    Int content() const;

    std::string to_string() const;

private:
    IntVec coords_;
};

/// Eigenvalue sign counts of a nondegenerate symmetric form.
struct SignatureData {
    std::size_t positive = 0;
    std::size_t negative = 0;

    Int sigma() const { return Int(positive) - Int(negative); }
    std::size_t rank() const { return positive + negative; }
    bool operator==(const SignatureData&) const = default;
};

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite };

/// A symmetric nondegenerate bilinear form on Z^m given by its Gram matrix.
/// Models the intersection pairing on H^2(M;Z)/Tor of a closed oriented
/// 4-manifold. Immutable; all member functions are pure.
class IntersectionLattice {
public:
    IntersectionLattice() = default;  // the rank-0 lattice

    // Validates squareness and symmetry; degeneracy is detected at the
    // operations that need nondegeneracy so that diagnostics can report it.
    static IntersectionLattice from_rows(std::vector<IntVec> rows);
    static IntersectionLattice diagonal(const IntVec& entries);
    static IntersectionLattice hyperbolic_plane();  // [[0,1],[1,0]]
    static IntersectionLattice e8();                // positive definite E8
    static IntersectionLattice minus_e8();

    std::size_t rank() const { return rank_; }
    const Int& at(std::size_t i, std::size_t j) const { return gram_[i][j]; }
    const std::vector<IntVec>& gram() const { return gram_; }

    /// x^T * gram * y, exact.
    Int pair(const CohClass& x, const CohClass& y) const;

    /// Vector of pairings of x against every basis vector, i.e. gram * x.
    CohClass basis_pairings(const CohClass& x) const;

    /// Sign counts via exact rational congruence diagonalization
    /// (Jacobi/Sylvester law of inertia). Throws DegenerateFormError when the
    /// pivot search exhausts a nonzero block.
    SignatureData signature() const;

    /// Exact determinant (fraction-free Bareiss elimination).
    Int determinant() const;

    bool nondegenerate() const { return determinant() != 0; }
    bool unimodular() const;

    bool is_definite() const;
    Definiteness definiteness() const;

    /// True iff pair(w, y) = pair(y, y) mod 2 for every basis vector y;
    /// bilinearity extends the congruence to the whole lattice, so checking
    /// the basis suffices. Characteristic vectors are exactly the integral
    /// lifts of w_2.
    bool is_characteristic(const CohClass& w) const;

    /// Block-diagonal sum; rank and signature add.
    IntersectionLattice direct_sum(const IntersectionLattice& other) const;

    /// Diagonal entries of the inverse Gram matrix, exact. Used for the
    /// per-coordinate enumeration bound x_i^2 <= (Q^-1)_ii * Q(x).
    std::vector<Rat> inverse_diagonal() const;

    bool operator==(const IntersectionLattice& o) const { return gram_ == o.gram_; }

private:
    IntersectionLattice(std::vector<IntVec> gram, std::size_t rank)
        : gram_(std::move(gram)), rank_(rank) {}

    void check_dim(const CohClass& x, const char* role) const;

    std::vector<IntVec> gram_;
    std::size_t rank_ = 0;
};

} // namespace chern4

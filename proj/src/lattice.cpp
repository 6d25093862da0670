#include "chern4/lattice.hpp"

#include "chern4/errors.hpp"

#include <sstream>
#include <utility>

namespace chern4 {

bool CohClass::is_zero() const {
    for (const Int& c : coords_)
        if (c != 0) return false;
    return true;
}

CohClass CohClass::operator+(const CohClass& o) const {
    if (size() != o.size())
        throw DimensionError("class addition: lengths " + std::to_string(size()) +
                             " and " + std::to_string(o.size()) + " differ");
    IntVec out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = coords_[i] + o.coords_[i];
    return CohClass(std::move(out));
}

CohClass CohClass::operator-(const CohClass& o) const { return *this + (-o); }

CohClass CohClass::operator-() const {
    IntVec out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = -coords_[i];
    return CohClass(std::move(out));
}

CohClass CohClass::operator*(const Int& k) const {
    IntVec out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = coords_[i] * k;
    return CohClass(std::move(out));
}

std::strong_ordering CohClass::operator<=>(const CohClass& o) const {
    if (size() != o.size()) return size() <=> o.size();
    for (std::size_t i = 0; i < size(); ++i) {
        if (coords_[i] < o.coords_[i]) return std::strong_ordering::less;
        if (coords_[i] > o.coords_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

CohClass CohClass::mod2() const {
    IntVec out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = ((coords_[i] % 2) + 2) % 2;
    return CohClass(std::move(out));
}

bool CohClass::congruent_mod2(const CohClass& o) const {
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if ((coords_[i] - o.coords_[i]) % 2 != 0) return false;
    return true;
}

Int CohClass::content() const {
    Int g = 0;
    for (const Int& c : coords_) g = gcd(g, c);
    return g;
}

std::string CohClass::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ", ";
        os << coords_[i];
    }
    os << "]";
    return os.str();
}

IntersectionLattice IntersectionLattice::from_rows(std::vector<IntVec> rows) {
    const std::size_t m = rows.size();
    for (const IntVec& r : rows)
        if (r.size() != m)
            throw DimensionError("Gram matrix must be square; got a row of length " +
                                 std::to_string(r.size()) + " in a " + std::to_string(m) +
                                 "x" + std::to_string(m) + " matrix");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (rows[i][j] != rows[j][i])
                throw Error("Gram matrix must be symmetric; entries (" + std::to_string(i) +
                            "," + std::to_string(j) + ") and (" + std::to_string(j) + "," +
                            std::to_string(i) + ") differ");
    return IntersectionLattice(std::move(rows), m);
}

IntersectionLattice IntersectionLattice::diagonal(const IntVec& entries) {
    const std::size_t m = entries.size();
    std::vector<IntVec> g(m, IntVec(m, 0));
    for (std::size_t i = 0; i < m; ++i) g[i][i] = entries[i];
    return IntersectionLattice(std::move(g), m);
}

IntersectionLattice IntersectionLattice::hyperbolic_plane() {
    return from_rows({{0, 1}, {1, 0}});
}

IntersectionLattice IntersectionLattice::e8() {
    // Cartan matrix of E8: chain 1-...-7 with node 8 attached to node 5.
    // Even, unimodular, positive definite of rank 8.
    std::vector<IntVec> g(8, IntVec(8, 0));
    for (std::size_t i = 0; i < 8; ++i) g[i][i] = 2;
    const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                         {4, 5}, {5, 6}, {4, 7}};
    for (auto [i, j] : edges) {
        g[i][j] = -1;
        g[j][i] = -1;
    }
    return IntersectionLattice(std::move(g), 8);
}

IntersectionLattice IntersectionLattice::minus_e8() {
    IntersectionLattice l = e8();
    for (IntVec& row : l.gram_)
        for (Int& x : row) x = -x;
    return l;
}

void IntersectionLattice::check_dim(const CohClass& x, const char* role) const {
    if (x.size() != rank_)
        throw DimensionError(std::string(role) + " has length " + std::to_string(x.size()) +
                             " but the lattice has rank " + std::to_string(rank_));
}

Int IntersectionLattice::pair(const CohClass& x, const CohClass& y) const {
    check_dim(x, "left class");
    check_dim(y, "right class");
    Int acc = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < rank_; ++j)
            if (gram_[i][j] != 0) row += gram_[i][j] * y[j];
        acc += x[i] * row;
    }
    return acc;
}

CohClass IntersectionLattice::basis_pairings(const CohClass& x) const {
    check_dim(x, "class");
    IntVec out(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j)
            if (gram_[i][j] != 0) out[i] += gram_[i][j] * x[j];
    return CohClass(std::move(out));
}

SignatureData IntersectionLattice::signature() const {
    // Congruence diagonalization over Q. Each step applies T^T A T for an
    // elementary T, so the diagonal sign counts are the inertia of the form.
    const std::size_t n = rank_;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(gram_[i][j]);

    SignatureData sig;
    std::size_t k = 0;
    while (k < n) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i)
            if (a[i][i] != 0) { pivot = i; break; }

        if (pivot == n) {
            // No diagonal pivot left. A nonzero off-diagonal entry a_ij lets
            // us add row/column j into i, creating diagonal 2*a_ij != 0.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) { pi = i; pj = j; break; }
            if (pi == n)
                throw DegenerateFormError(
                    "form is degenerate: zero pivot chain exhausts all permutations at index " +
                    std::to_string(k));
            for (std::size_t t = 0; t < n; ++t) a[pi][t] += a[pj][t];
            for (std::size_t t = 0; t < n; ++t) a[t][pi] += a[t][pj];
            continue;
        }

        if (pivot != k) {
            for (std::size_t t = 0; t < n; ++t) std::swap(a[pivot][t], a[k][t]);
            for (std::size_t t = 0; t < n; ++t) std::swap(a[t][pivot], a[t][k]);
        }

        const Rat piv = a[k][k];
        if (piv > 0) ++sig.positive; else ++sig.negative;

        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rat f = a[i][k] / piv;
            for (std::size_t t = k; t < n; ++t) a[i][t] -= f * a[k][t];
            for (std::size_t t = k; t < n; ++t) a[t][i] -= f * a[t][k];
        }
        ++k;
    }
    return sig;
}

Int IntersectionLattice::determinant() const {
    // Fraction-free Bareiss elimination; every division is exact.
    const std::size_t n = rank_;
    if (n == 0) return 1;
    std::vector<IntVec> a = gram_;
    Int prev = 1;
    Int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool IntersectionLattice::unimodular() const {
    const Int d = determinant();
    return d == 1 || d == -1;
}

bool IntersectionLattice::is_definite() const {
    if (rank_ == 0) return true;
    const SignatureData s = signature();
    return s.positive == rank_ || s.negative == rank_;
}

Definiteness IntersectionLattice::definiteness() const {
    if (rank_ == 0) return Definiteness::PositiveDefinite;
    const SignatureData s = signature();
    if (s.positive == rank_) return Definiteness::PositiveDefinite;
    if (s.negative == rank_) return Definiteness::NegativeDefinite;
    return Definiteness::Indefinite;
}

bool IntersectionLattice::is_characteristic(const CohClass& w) const {
    check_dim(w, "candidate characteristic vector");
    const CohClass gw = basis_pairings(w);
    for (std::size_t i = 0; i < rank_; ++i)
        if ((gw[i] - gram_[i][i]) % 2 != 0) return false;
    return true;
}

IntersectionLattice IntersectionLattice::direct_sum(const IntersectionLattice& other) const {
    const std::size_t n = rank_ + other.rank_;
    std::vector<IntVec> g(n, IntVec(n, 0));
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) g[i][j] = gram_[i][j];
    for (std::size_t i = 0; i < other.rank_; ++i)
        for (std::size_t j = 0; j < other.rank_; ++j)
            g[rank_ + i][rank_ + j] = other.gram_[i][j];
    return IntersectionLattice(std::move(g), n);
}

std::vector<Rat> IntersectionLattice::inverse_diagonal() const {
    // Gauss-Jordan over Q on [gram | I]; returns diag(gram^-1).
    const std::size_t n = rank_;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(gram_[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (a[i][k] != 0) { p = i; break; }
        if (p == n) throw DegenerateFormError("form is degenerate: no pivot in column " +
                                              std::to_string(k));
        std::swap(a[k], a[p]);
        const Rat piv = a[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rat f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rat> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a[i][n + i];
    return diag;
}

} // namespace chern4

#include "chern4/manifold.hpp"

#include "chern4/errors.hpp"

#include <regex>

namespace chern4 {

namespace {

std::size_t small_index(const Int& n, const char* what) {
    if (n < 1 || n > 100000) throw Error(std::string(what) + " out of range: must be in [1, 100000]");
    return static_cast<std::size_t>(n);
}

std::string format_sum_name(const Int& m, const Int& n) {
    const auto part = [](const Int& k, const char* base) {
        if (k == 1) return std::string(base);
        return k.str() + base;
    };
    if (n == 0) return part(m, "CP2");
    if (m == 0) return part(n, "CP2bar");
    return part(m, "CP2") + "_" + part(n, "CP2bar");
}

} // namespace

FourManifoldModel projective_plane_sum(const Int& m, const Int& n) {
    if (m < 0 || n < 0 || m + n < 1)
        throw Error("projective plane sum needs m, n >= 0 and m + n >= 1");
    const std::size_t mm = (m == 0) ? 0 : small_index(m, "CP2 multiplicity");
    const std::size_t nn = (n == 0) ? 0 : small_index(n, "CP2bar multiplicity");
    IntVec diag(mm + nn);
    for (std::size_t i = 0; i < mm + nn; ++i) diag[i] = (i < mm) ? 1 : -1;

    FourManifoldModel out;
    out.name = format_sum_name(m, n);
    out.lattice = IntersectionLattice::diagonal(diag);
    out.euler = 2 + m + n;
    out.sigma = m - n;
    out.w2 = CohClass(IntVec(mm + nn, Int(1)));
    if (m == 1 && n == 0) out.complex_c1 = CohClass({Int(3)});
    return out;
}

FourManifoldModel elliptic_surface(const Int& n) {
    const std::size_t nn = small_index(n, "elliptic surface index");
    FourManifoldModel out;
    out.name = "E(" + n.str() + ")";
    out.euler = 12 * n;
    out.sigma = -8 * n;

    if (nn % 2 == 1) {
        // Odd n: the odd diagonal form (2n-1)<1> + (10n-1)<-1>. The fiber
        // generalizes E(1)'s 3h - e_1 - ... - e_9: n threes and n-1 ones on
        // the positive part, -1 everywhere on the negative part; its square
        // is 9n + (n-1) - (10n-1) = 0.
        const std::size_t pos = 2 * nn - 1, neg = 10 * nn - 1;
        IntVec diag(pos + neg);
        IntVec fib(pos + neg);
        for (std::size_t i = 0; i < pos + neg; ++i) {
            diag[i] = (i < pos) ? 1 : -1;
            if (i < nn) fib[i] = 3;
            else if (i < pos) fib[i] = 1;
            else fib[i] = -1;
        }
        out.lattice = IntersectionLattice::diagonal(diag);
        out.w2 = CohClass(IntVec(pos + neg, Int(1)));
        out.fiber = CohClass(fib);
    } else {
        // Even n: the even form n(-E8) + (2n-1)U, fiber the first isotropic
        // generator of the first hyperbolic summand.
        IntersectionLattice l = IntersectionLattice::minus_e8();
        for (std::size_t i = 1; i < nn; ++i) l = l.direct_sum(IntersectionLattice::minus_e8());
        for (std::size_t i = 0; i + 1 < 2 * nn; ++i)
            l = l.direct_sum(IntersectionLattice::hyperbolic_plane());
        IntVec fib(l.rank(), Int(0));
        fib[8 * nn] = 1;
        out.lattice = std::move(l);
        out.w2 = CohClass::zero(out.lattice.rank());
        out.fiber = CohClass(fib);
    }
    out.complex_c1 = *out.fiber * (Int(2) - n);
    return out;
}

FourManifoldModel preset(const std::string& name) {
    if (name == "S2xS2") {
        FourManifoldModel out;
        out.name = "S2xS2";
        out.lattice = IntersectionLattice::hyperbolic_plane();
        out.euler = 4;
        out.sigma = 0;
        out.w2 = CohClass::zero(2);
        out.complex_c1 = CohClass({Int(2), Int(2)});
        return out;
    }
    if (name == "K3") {
        FourManifoldModel out = elliptic_surface(2);
        out.name = "K3";
        return out;
    }

    static const std::regex elliptic_re(R"(^E\(?([0-9]+)\)?$)");
    static const std::regex sum_re(R"(^(?:([0-9]*)CP2)?(?:_?([0-9]*)CP2bar)?$)");
    std::smatch m;
    if (std::regex_match(name, m, elliptic_re)) return elliptic_surface(Int(m[1].str()));
    if (std::regex_match(name, m, sum_re) && (m[1].matched || m[2].matched)) {
        const auto count = [](const std::ssub_match& g) {
            if (!g.matched) return Int(0);
            return g.str().empty() ? Int(1) : Int(g.str());
        };
        return projective_plane_sum(count(m[1]), count(m[2]));
    }
    throw ParseError("unknown preset: " + name);
}

FourManifoldModel connected_sum(const FourManifoldModel& a, const FourManifoldModel& b) {
    if (!a.simply_connected_profile() || !b.simply_connected_profile())
        throw Error("connected_sum expects simply connected summands (euler = rank + 2)");
    FourManifoldModel out;
    out.name = a.name + "#" + b.name;
    out.lattice = a.lattice.direct_sum(b.lattice);
    out.euler = a.euler + b.euler - 2;
    out.sigma = a.sigma + b.sigma;
    IntVec w(out.lattice.rank());
    for (std::size_t i = 0; i < a.lattice.rank(); ++i) w[i] = a.w2[i];
    for (std::size_t i = 0; i < b.lattice.rank(); ++i) w[a.lattice.rank() + i] = b.w2[i];
    out.w2 = CohClass(std::move(w));
    return out;
}

std::vector<Diagnostic> validate(const FourManifoldModel& m) {
    std::vector<Diagnostic> out;
    const std::size_t rank = m.lattice.rank();
    const auto add = [&](const std::string& check, bool pass, const std::string& detail) {
        out.push_back(Diagnostic{check, pass, detail});
    };

    const bool w2_ok = m.w2.size() == rank;
    add("w2_length", w2_ok,
        w2_ok ? "matches lattice rank" : "w2 has length " + std::to_string(m.w2.size()) +
                                             ", lattice rank is " + std::to_string(rank));

    const bool nondeg = m.lattice.nondegenerate();
    add("nondegenerate", nondeg, nondeg ? "det != 0" : "Gram matrix is singular");

    const bool unimod = nondeg && m.lattice.unimodular();
    add("unimodular", unimod,
        unimod ? "|det| = 1" : "det = " + m.lattice.determinant().str());

    if (nondeg) {
        const Int sig = m.lattice.signature().sigma();
        const bool match = sig == m.sigma;
        add("sigma_recomputed", match,
            match ? "sigma = " + sig.str()
                  : "stored sigma " + m.sigma.str() + ", lattice gives " + sig.str());
    } else {
        add("sigma_recomputed", false, "signature undefined on a degenerate form");
    }

    if (w2_ok) {
        const bool ch = m.lattice.is_characteristic(m.w2);
        add("w2_characteristic", ch,
            ch ? "pair(w2, y) = pair(y, y) mod 2 on the basis"
               : "some basis vector violates the characteristic congruence");
        if (nondeg) {
            const Int sig = m.lattice.signature().sigma();
            const Int defect = (sig - m.lattice.pair(m.w2, m.w2)) % 8;
            const bool cong = defect == 0;
            add("mod8_congruence", cong,
                cong ? "sigma = pair(w2,w2) mod 8"
                     : "sigma - pair(w2,w2) = " + defect.str() + " mod 8");
        } else {
            add("mod8_congruence", false, "signature undefined on a degenerate form");
        }
    }

    if (m.fiber) {
        const bool len = m.fiber->size() == rank;
        const bool isotropic = len && m.lattice.pair(*m.fiber, *m.fiber) == 0;
        const bool nonzero = len && !m.fiber->is_zero();
        add("fiber_isotropic", len && isotropic && nonzero,
            !len ? "fiber length mismatch"
                 : (!isotropic ? "pair(fiber, fiber) = " +
                                     m.lattice.pair(*m.fiber, *m.fiber).str()
                               : (nonzero ? "square zero and nonzero" : "fiber is zero")));
    }

    if (m.complex_c1) {
        const bool len = m.complex_c1->size() == rank;
        const bool par = len && w2_ok && m.complex_c1->congruent_mod2(m.w2);
        const bool square = len && m.lattice.pair(*m.complex_c1, *m.complex_c1) ==
                                       m.chern_number_target();
        add("complex_c1_admissible", len && par && square,
            !len ? "complex_c1 length mismatch"
                 : (!par ? "complex_c1 is not congruent to w2 mod 2"
                         : (square ? "square equals 3*sigma + 2*euler"
                                   : "square differs from 3*sigma + 2*euler")));
    }

    return out;
}

bool all_pass(const std::vector<Diagnostic>& diags) {
    for (const Diagnostic& d : diags)
        if (!d.pass) return false;
    return true;
}

} // namespace chern4

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chern4/errors.hpp"
#include "chern4/moduli.hpp"

#include <random>
#include <vector>

using namespace chern4;

namespace {

CohClass cls(std::vector<long long> v) {
    IntVec w(v.begin(), v.end());
    return CohClass(std::move(w));
}

}  // namespace

TEST_CASE("canonical class from chTM") {
    CHECK(canonical_from_chTM(ChernData{4, cls({0}), -3}).c1K == cls({0}));
    CHECK(canonical_from_chTM(ChernData{4, cls({-6}), 15}).c1K == cls({-3}));
    CHECK(canonical_from_chTM(ChernData{4, cls({2, -4}), 7}).c1K == cls({1, -2}));
    CHECK_THROWS_AS(canonical_from_chTM(ChernData{4, cls({3}), 0}), InconsistencyError);
    CHECK_THROWS_AS(canonical_from_chTM(ChernData{4, cls({2, 1}), 0}), InconsistencyError);
}

TEST_CASE("canonical class of reference structures") {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<int> coord(-5, 5);
    auto u = IntersectionLattice::hyperbolic_plane();
    for (int i = 0; i < 25; ++i) {
        CohClass c = cls({coord(rng), coord(rng)});
        Int chi = coord(rng);
        // complex structures: half of twice the cotangent class
        CHECK(canonical_from_chTM(complex_structure_chTM(u, c, chi)).c1K == c);
        // symplectic structures: canonical class vanishes at this level
        CHECK(canonical_from_chTM(symplectic_chTM(u, c, chi)).c1K.is_zero());
    }
}

TEST_CASE("canonical class of a generalized complex pair") {
    auto ac = admissible_ac_chern(preset("3CP2"));
    REQUIRE(ac.values.size() == 24);
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<std::size_t> pick(0, ac.values.size() - 1);
    for (int i = 0; i < 50; ++i) {
        const ChernData& plus = ac.values[pick(rng)];
        const ChernData& minus = ac.values[pick(rng)];
        auto j1 = gc_chTM_from_pair(preset("3CP2").lattice, plus, minus, GcKind::J1);
        CohClass sum = plus.c1 + minus.c1;
        CHECK(j1.c1 == sum);
        CanonicalClass k = canonical_from_chTM(j1);
        CHECK(k.c1K * Int(2) == sum);
    }
}

TEST_CASE("log transform canonical classes") {
    auto e1 = preset("E(1)");
    CHECK(log_transform_canonical(e1, 0).c1K.is_zero());
    CHECK(log_transform_canonical(e1, 1).c1K == -*e1.fiber);
    CHECK(log_transform_canonical(e1, 4).c1K == *e1.fiber * Int(-4));
    auto k3 = preset("K3");
    CHECK(log_transform_canonical(k3, 5).c1K == *k3.fiber * Int(-5));
    CHECK_THROWS_AS(log_transform_canonical(preset("CP2"), 1), ModelError);
    CHECK_THROWS_AS(log_transform_canonical(e1, -1), Error);
}

TEST_CASE("orbit invariants") {
    auto e1 = preset("E(1)");
    auto inv = orbit_invariants(e1.lattice, *e1.fiber);
    CHECK(inv.square == 0);
    CHECK(inv.divisibility == 1);
    CHECK(inv.characteristic);
    CHECK(inv.primitive);

    auto inv2 = orbit_invariants(e1.lattice, *e1.fiber * Int(2));
    CHECK(inv2.square == 0);
    CHECK(inv2.divisibility == 2);
    CHECK_FALSE(inv2.characteristic);
    CHECK_FALSE(inv2.primitive);

    auto zero = orbit_invariants(e1.lattice, CohClass::zero(10));
    CHECK(zero.square == 0);
    CHECK(zero.divisibility == 0);
    CHECK_FALSE(zero.characteristic);  // the odd form has no even characteristic vector
    CHECK_FALSE(zero.primitive);

    // 0 is characteristic exactly on an even lattice
    auto u = IntersectionLattice::hyperbolic_plane();
    CHECK(orbit_invariants(u, CohClass::zero(2)).characteristic);

    auto cp2 = preset("CP2");
    auto i3 = orbit_invariants(cp2.lattice, cls({3}));
    CHECK(i3.square == 9);
    CHECK(i3.divisibility == 3);
    CHECK(i3.characteristic);
    CHECK_FALSE(i3.primitive);
}

TEST_CASE("invariants scale as expected") {
    std::mt19937_64 rng(1618);
    std::uniform_int_distribution<int> coord(-4, 4);
    std::uniform_int_distribution<int> mul(1, 5);
    auto l = IntersectionLattice::diagonal({1, 1, -1});
    for (int i = 0; i < 40; ++i) {
        CohClass x = cls({coord(rng), coord(rng), coord(rng)});
        Int k = mul(rng);
        auto a = orbit_invariants(l, x);
        auto b = orbit_invariants(l, x * k);
        CHECK(b.square == k * k * a.square);
        CHECK(b.divisibility == k * a.divisibility);
        // divisibility divides the square
        if (a.divisibility != 0) CHECK(a.square % a.divisibility == 0);
    }
}

TEST_CASE("invariants are stable under lattice automorphisms") {
    // diag(1,1,-1): swapping the two +1 coordinates or flipping any sign
    // preserves the form
    auto l = IntersectionLattice::diagonal({1, 1, -1});
    std::mt19937_64 rng(6061);
    std::uniform_int_distribution<int> coord(-5, 5);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < 40; ++i) {
        Int x0 = coord(rng), x1 = coord(rng), x2 = coord(rng);
        CohClass x = CohClass({x0, x1, x2});
        Int s0 = bit(rng) ? 1 : -1, s1 = bit(rng) ? 1 : -1, s2 = bit(rng) ? 1 : -1;
        CohClass y = bit(rng) ? CohClass({s0 * x0, s1 * x1, s2 * x2})
                              : CohClass({s0 * x1, s1 * x0, s2 * x2});
        CHECK(orbit_invariants(l, x) == orbit_invariants(l, y));
        CHECK(distinguish(l, x, y) == OrbitVerdict::Inconclusive);
    }
}

TEST_CASE("distinguish") {
    auto e1 = preset("E(1)");
    CHECK(distinguish(e1.lattice, *e1.fiber, *e1.fiber * Int(2)) ==
          OrbitVerdict::DistinctOrbits);
    auto cp2 = preset("CP2");
    CHECK(distinguish(cp2.lattice, cls({3}), cls({-3})) == OrbitVerdict::Inconclusive);
    CHECK(distinguish(cp2.lattice, cls({3}), cls({3})) == OrbitVerdict::Inconclusive);
    CHECK(distinguish(cp2.lattice, cls({3}), cls({1})) == OrbitVerdict::DistinctOrbits);
}

TEST_CASE("infinitude certificate for elliptic surfaces") {
    for (const char* name : {"E(1)", "K3", "E(3)"}) {
        auto m = preset(name);
        auto cert = infinite_components_certificate(m, 10);
        CHECK(cert.manifold == m.name);
        CHECK(cert.verified);
        REQUIRE(cert.entries.size() == 11);
        for (std::size_t k = 0; k < cert.entries.size(); ++k) {
            const auto& e = cert.entries[k];
            CHECK(e.k == Int(k));
            CHECK(e.invariants.square == 0);
            CHECK(e.invariants.divisibility == Int(k));
            if (k == 0) {
                CHECK(e.canonical.c1K.is_zero());
            } else {
                CHECK(e.canonical.c1K == *m.fiber * -Int(k));
                CHECK_FALSE(e.canonical.c1K.is_zero());
            }
        }
    }
}

TEST_CASE("infinitude certificate input checking") {
    CHECK_THROWS_AS(infinite_components_certificate(preset("CP2"), 10), ModelError);
    CHECK_THROWS_AS(infinite_components_certificate(preset("E(1)"), 1), Error);

    auto broken = preset("E(1)");
    broken.fiber = CohClass::zero(10);
    CHECK_THROWS_AS(infinite_components_certificate(broken, 5), ModelError);
    broken.fiber = cls({1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(infinite_components_certificate(broken, 5), ModelError);
}

TEST_CASE("certificate scales to one hundred transforms") {
    auto cert = infinite_components_certificate(preset("E(1)"), 100);
    CHECK(cert.verified);
    CHECK(cert.entries.size() == 101);
}

TEST_CASE("finiteness certificates") {
    auto c = finiteness_certificate(preset("CP2"));
    CHECK(c.manifold == "CP2");
    CHECK(c.verdict == FinitenessVerdict::Finite);
    CHECK(c.chern.completeness == Completeness::Complete);
    CHECK(c.chern.values.size() == 3);

    // x^2 + y^2 = 14 has no odd solutions
    auto c2 = finiteness_certificate(preset("2CP2"));
    CHECK(c2.verdict == FinitenessVerdict::Finite);
    CHECK(c2.chern.values.empty());

    auto c3 = finiteness_certificate(preset("3CP2"));
    CHECK(c3.verdict == FinitenessVerdict::Finite);
    CHECK_FALSE(c3.chern.values.empty());

    auto s = finiteness_certificate(preset("S2xS2"));
    CHECK(s.verdict == FinitenessVerdict::NotApplicable);
    CHECK(s.chern.completeness == Completeness::WindowTruncated);
    CHECK(s.chern.values.size() == 3);

    auto k3 = finiteness_certificate(preset("K3"), 0);
    CHECK(k3.verdict == FinitenessVerdict::NotApplicable);
    REQUIRE(k3.chern.values.size() == 1);
    CHECK(k3.chern.values[0] == ChernData{4, CohClass::zero(22), 48});
}

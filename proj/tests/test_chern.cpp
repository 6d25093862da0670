#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chern4/chern.hpp"
#include "chern4/errors.hpp"
#include "chern4/manifold.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace chern4;

namespace {

CohClass cls(std::vector<long long> v) {
    IntVec w(v.begin(), v.end());
    return CohClass(std::move(w));
}

ChernData random_datum(std::size_t rank_of_lattice, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(-5, 5);
    std::uniform_int_distribution<int> small(0, 4);
    IntVec c(rank_of_lattice);
    for (auto& x : c) x = coord(rng);
    return ChernData{static_cast<std::size_t>(small(rng)), CohClass(std::move(c)),
                     Int(coord(rng))};
}

}  // namespace

TEST_CASE("whitney product on the projective plane") {
    auto cp2 = IntersectionLattice::diagonal({1});
    ChernData t{2, cls({3}), 3};
    ChernData tbar{2, cls({-3}), 3};
    ChernData p = whitney_product(cp2, t, tbar);
    CHECK(p == ChernData{4, cls({0}), -3});
    CHECK(whitney_product(cp2, t, t) == ChernData{4, cls({6}), 15});

    ChernData unit{0, cls({0}), 0};
    CHECK(whitney_product(cp2, t, unit) == t);
    CHECK(whitney_product(cp2, unit, t) == t);

    CHECK_THROWS_AS(whitney_product(cp2, ChernData{2, cls({1, 0}), 0}, t), DimensionError);
}

TEST_CASE("conjugation") {
    ChernData t{2, cls({3}), 3};
    CHECK(conjugate(t) == ChernData{2, cls({-3}), 3});
    CHECK(conjugate(conjugate(t)) == t);
    ChernData even{4, cls({0}), -3};
    CHECK(conjugate(even) == even);
}

TEST_CASE("whitney algebra properties") {
    std::mt19937_64 rng(77001);
    const std::vector<IntersectionLattice> pool = {
        IntersectionLattice::diagonal({1}),
        IntersectionLattice::diagonal({1, -1}),
        IntersectionLattice::hyperbolic_plane(),
        IntersectionLattice::diagonal({1, 1, -1}),
    };
    for (int iter = 0; iter < 100; ++iter) {
        const auto& l = pool[iter % pool.size()];
        ChernData a = random_datum(l.rank(), rng);
        ChernData b = random_datum(l.rank(), rng);
        ChernData c = random_datum(l.rank(), rng);
        CHECK(whitney_product(l, a, b) == whitney_product(l, b, a));
        CHECK(whitney_product(l, whitney_product(l, a, b), c) ==
              whitney_product(l, a, whitney_product(l, b, c)));
        ChernData unit{0, CohClass::zero(l.rank()), 0};
        CHECK(whitney_product(l, a, unit) == a);
        // conjugation is a ring homomorphism and an involution
        CHECK(conjugate(conjugate(a)) == a);
        CHECK(conjugate(whitney_product(l, a, b)) ==
              whitney_product(l, conjugate(a), conjugate(b)));
    }
}

TEST_CASE("chern data of reference structures") {
    auto cp2 = IntersectionLattice::diagonal({1});
    // holomorphic cotangent of the plane has c1 = -3a
    CHECK(complex_structure_chTM(cp2, cls({-3}), 3) == ChernData{4, cls({-6}), 15});
    CHECK(symplectic_chTM(cp2, cls({3}), 3) == ChernData{4, cls({0}), -3});

    auto k3 = preset("K3");
    CHECK(complex_structure_chTM(k3.lattice, CohClass::zero(22), 24) ==
          ChernData{4, CohClass::zero(22), 48});
    CHECK(symplectic_chTM(k3.lattice, CohClass::zero(22), 24) ==
          ChernData{4, CohClass::zero(22), 48});

    // c1 of the symplectic structure always cancels
    std::mt19937_64 rng(5150);
    auto u = IntersectionLattice::hyperbolic_plane();
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int i = 0; i < 20; ++i) {
        CohClass c = cls({coord(rng), coord(rng)});
        Int chi = coord(rng);
        ChernData s = symplectic_chTM(u, c, chi);
        CHECK(s.rank == 4);
        CHECK(s.c1.is_zero());
        CHECK(s.c2 == 2 * chi - u.pair(c, c));
    }
}

TEST_CASE("generalized complex pairs") {
    auto cp2 = IntersectionLattice::diagonal({1});
    ChernData plus{2, cls({3}), 3};
    ChernData minus{2, cls({-3}), 3};
    CHECK(gc_chTM_from_pair(cp2, plus, minus, GcKind::J1) == ChernData{4, cls({0}), -3});
    CHECK(gc_chTM_from_pair(cp2, plus, plus, GcKind::J1) == ChernData{4, cls({6}), 15});
    // J2 conjugates the minus factor
    CHECK(gc_chTM_from_pair(cp2, plus, minus, GcKind::J2) == ChernData{4, cls({6}), 15});

    CHECK_THROWS_AS(gc_chTM_from_pair(cp2, ChernData{4, cls({0}), 0}, minus, GcKind::J1),
                    DimensionError);
    CHECK_THROWS_AS(gc_chTM_from_pair(cp2, plus, ChernData{1, cls({1}), 0}, GcKind::J2),
                    DimensionError);

    std::mt19937_64 rng(90125);
    auto u = IntersectionLattice::hyperbolic_plane();
    std::uniform_int_distribution<int> coord(-4, 4);
    for (int i = 0; i < 30; ++i) {
        ChernData a{2, cls({coord(rng), coord(rng)}), Int(coord(rng))};
        ChernData b{2, cls({coord(rng), coord(rng)}), Int(coord(rng))};
        CHECK(gc_chTM_from_pair(u, a, b, GcKind::J1) == gc_chTM_from_pair(u, b, a, GcKind::J1));
        CHECK(gc_chTM_from_pair(u, a, b, GcKind::J2) ==
              gc_chTM_from_pair(u, a, conjugate(b), GcKind::J1));
        // the two kinds differ exactly by the cross term
        Int d1 = gc_chTM_from_pair(u, a, b, GcKind::J1).c2;
        Int d2 = gc_chTM_from_pair(u, a, b, GcKind::J2).c2;
        CHECK(d1 - d2 == 2 * u.pair(a.c1, b.c1));
    }
}

TEST_CASE("admissible almost complex chern data") {
    auto r = admissible_ac_chern(preset("CP2"));
    CHECK(r.completeness == Completeness::Complete);
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0] == ChernData{2, cls({-3}), 3});
    CHECK(r.values[1] == ChernData{2, cls({3}), 3});

    auto s = admissible_ac_chern(preset("S2xS2"));
    CHECK(s.completeness == Completeness::WindowTruncated);
    REQUIRE(s.values.size() == 2);
    CHECK(s.values[0] == ChernData{2, cls({-2, -2}), 4});
    CHECK(s.values[1] == ChernData{2, cls({2, 2}), 4});

    // x^2 = 8 has no odd solution on the plane
    CHECK(admissible_ac_chern(preset("CP2bar")).values.empty());

    auto m3 = admissible_ac_chern(preset("3CP2"));
    CHECK(m3.values.size() == 24);
    for (const auto& d : m3.values) {
        CHECK(d.rank == 2);
        CHECK(d.c2 == 5);  // euler of the triple sum
    }
}

TEST_CASE("gc chern image of the projective plane") {
    auto g = gc_admissible_chern(preset("CP2"));
    CHECK(g.completeness == Completeness::Complete);
    REQUIRE(g.values.size() == 3);
    CHECK(g.values[0] == ChernData{4, cls({-6}), 15});
    CHECK(g.values[1] == ChernData{4, cls({0}), -3});
    CHECK(g.values[2] == ChernData{4, cls({6}), 15});
    CHECK(conjugation_class_count(g.values) == 2);
    CHECK(std::is_sorted(g.values.begin(), g.values.end(),
                         [](const ChernData& a, const ChernData& b) { return a < b; }));
}

TEST_CASE("gc chern image of K3 at window zero") {
    auto g = gc_admissible_chern(preset("K3"), 0);
    CHECK(g.completeness == Completeness::WindowTruncated);
    REQUIRE(g.values.size() == 1);
    CHECK(g.values[0] == ChernData{4, CohClass::zero(22), 48});
}

TEST_CASE("gc values have even c1") {
    for (const char* name : {"CP2", "3CP2", "S2xS2"}) {
        auto g = gc_admissible_chern(preset(name), 4);
        CHECK(!g.values.empty());
        for (const auto& d : g.values) {
            CHECK(d.rank == 4);
            CHECK(d.c1.congruent_mod2(CohClass::zero(d.c1.size())));
        }
    }
}

TEST_CASE("conjugation class counting") {
    CHECK(conjugation_class_count({}) == 0);
    std::vector<ChernData> selfconj = {ChernData{4, cls({0}), -3}};
    CHECK(conjugation_class_count(selfconj) == 1);
    std::vector<ChernData> pair = {ChernData{2, cls({-3}), 3}, ChernData{2, cls({3}), 3}};
    CHECK(conjugation_class_count(pair) == 1);
}

TEST_CASE("K3 admissible data at window two contains the reference value") {
    auto r = admissible_ac_chern(preset("K3"), 2);
    CHECK(r.completeness == Completeness::WindowTruncated);
    ChernData ref{2, CohClass::zero(22), 24};
    CHECK(std::binary_search(r.values.begin(), r.values.end(), ref,
                             [](const ChernData& a, const ChernData& b) { return a < b; }));
    CHECK(r.values.size() == 1230165);
}

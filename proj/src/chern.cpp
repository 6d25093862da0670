#include "chern4/chern.hpp"

#include "chern4/errors.hpp"

#include <algorithm>
#include <set>

namespace chern4 {

namespace {

void check_over(const IntersectionLattice& l, const ChernData& d, const char* which) {
    if (d.c1.size() != l.rank())
        throw DimensionError(std::string(which) + " Chern data lives on a rank-" +
                             std::to_string(d.c1.size()) + " lattice, expected rank " +
                             std::to_string(l.rank()));
}

} // namespace

bool operator<(const ChernData& a, const ChernData& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.c1 != b.c1) return a.c1 < b.c1;
    return a.c2 < b.c2;
}

ChernData whitney_product(const IntersectionLattice& l, const ChernData& a,
                          const ChernData& b) {
    check_over(l, a, "left");
    check_over(l, b, "right");
    return ChernData{a.rank + b.rank, a.c1 + b.c1, a.c2 + b.c2 + l.pair(a.c1, b.c1)};
}

ChernData conjugate(const ChernData& d) { return ChernData{d.rank, -d.c1, d.c2}; }

ChernData complex_structure_chTM(const IntersectionLattice& l, const CohClass& c1_holo,
                                 const Int& chi) {
    const ChernData cotangent{2, c1_holo, chi};
    return whitney_product(l, cotangent, cotangent);
}

ChernData symplectic_chTM(const IntersectionLattice& l, const CohClass& c1_ac,
                          const Int& chi) {
    const ChernData tangent{2, c1_ac, chi};
    return whitney_product(l, tangent, conjugate(tangent));
}

ChernData gc_chTM_from_pair(const IntersectionLattice& l, const ChernData& plus,
                            const ChernData& minus, GcKind which) {
    check_over(l, plus, "plus");
    check_over(l, minus, "minus");
    if (plus.rank != 2 || minus.rank != 2)
        throw DimensionError("eigenbundle Chern data must have rank 2");
    return whitney_product(l, plus, which == GcKind::J1 ? minus : conjugate(minus));
}

AdmissibleChern admissible_ac_chern(const FourManifoldModel& m, const Int& window) {
    const EnumerationProblem problem(m.lattice, m.chern_number_target(), m.w2, window);
    const EnumerationResult result = enumerate_solutions(problem);
    AdmissibleChern out;
    out.completeness = result.completeness();
    out.values.reserve(result.solutions().size());
    for (const CohClass& c : result.solutions())
        out.values.push_back(ChernData{2, c, m.euler});
    return out;
}

AdmissibleChern gc_admissible_chern(const FourManifoldModel& m, const Int& window) {
    const AdmissibleChern ac = admissible_ac_chern(m, window);
    std::set<ChernData> seen;
    for (const ChernData& plus : ac.values)
        for (const ChernData& minus : ac.values)
            seen.insert(gc_chTM_from_pair(m.lattice, plus, minus, GcKind::J1));
    AdmissibleChern out;
    out.completeness = ac.completeness;
    out.values.assign(seen.begin(), seen.end());
    return out;
}

std::size_t conjugation_class_count(const std::vector<ChernData>& values) {
    std::set<ChernData> unseen(values.begin(), values.end());
    std::size_t classes = 0;
    while (!unseen.empty()) {
        const ChernData d = *unseen.begin();
        unseen.erase(unseen.begin());
        unseen.erase(conjugate(d));
        ++classes;
    }
    return classes;
}

} // namespace chern4

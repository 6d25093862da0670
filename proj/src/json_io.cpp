#include "chern4/json_io.hpp"

#include "chern4/errors.hpp"
#include "chern4/render.hpp"

#include <cstdint>
#include <limits>

namespace chern4 {

namespace {

const Int kJsonLo = Int(std::numeric_limits<std::int64_t>::min());
const Int kJsonHi = Int(std::numeric_limits<std::int64_t>::max());

} // namespace

Json int_to_json(const Int& x) {
    if (x >= kJsonLo && x <= kJsonHi) return static_cast<std::int64_t>(x);
    return x.str();
}

Int json_to_int(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError(where + ": not an integer: " + j.dump());
        }
    }
    throw ParseError(where + ": expected an integer, got " + j.dump());
}

Json class_to_json(const CohClass& c) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i) arr.push_back(int_to_json(c[i]));
    return arr;
}

CohClass json_to_class(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
    IntVec v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(json_to_int(j[i], where + "[" + std::to_string(i) + "]"));
    return CohClass(std::move(v));
}

Json chern_to_json(const IntersectionLattice& l, const ChernData& d) {
    Json out;
    out["rank"] = d.rank;
    out["c1"] = class_to_json(d.c1);
    out["c2"] = int_to_json(d.c2);
    out["pretty"] = render_chern(l, d);
    return out;
}

Json invariants_to_json(const OrbitInvariants& inv) {
    Json out;
    out["square"] = int_to_json(inv.square);
    out["divisibility"] = int_to_json(inv.divisibility);
    out["characteristic"] = inv.characteristic;
    out["primitive"] = inv.primitive;
    return out;
}

Json diagnostics_to_json(const std::vector<Diagnostic>& diags) {
    Json arr = Json::array();
    for (const Diagnostic& d : diags) {
        Json row;
        row["check"] = d.check;
        row["pass"] = d.pass;
        row["detail"] = d.detail;
        arr.push_back(std::move(row));
    }
    return arr;
}

Json manifold_to_json(const FourManifoldModel& m) {
    Json out;
    out["name"] = m.name;
    Json gram = Json::array();
    for (std::size_t i = 0; i < m.lattice.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.lattice.rank(); ++j)
            row.push_back(int_to_json(m.lattice.at(i, j)));
        gram.push_back(std::move(row));
    }
    out["gram"] = std::move(gram);
    out["euler"] = int_to_json(m.euler);
    out["sigma"] = int_to_json(m.sigma);
    out["w2"] = class_to_json(m.w2);
    if (m.fiber) out["fiber"] = class_to_json(*m.fiber);
    if (m.complex_c1) out["complex_c1"] = class_to_json(*m.complex_c1);
    return out;
}

FourManifoldModel manifold_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("manifold file: expected a JSON object");
    for (const char* key : {"gram", "euler", "w2"})
        if (!j.contains(key))
            throw ParseError(std::string("manifold file: missing required field '") +
                             key + "'");

    const Json& gram = j["gram"];
    if (!gram.is_array()) throw ParseError("manifold file: 'gram' must be an array of rows");
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < gram.size(); ++i) {
        const CohClass row = json_to_class(gram[i], "gram row " + std::to_string(i));
        IntVec r;
        for (std::size_t k = 0; k < row.size(); ++k) r.push_back(row[k]);
        rows.push_back(std::move(r));
    }

    FourManifoldModel m;
    m.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                         : "custom";
    m.lattice = IntersectionLattice::from_rows(rows);
    m.euler = json_to_int(j["euler"], "euler");
    m.w2 = json_to_class(j["w2"], "w2");
    if (j.contains("fiber")) m.fiber = json_to_class(j["fiber"], "fiber");
    if (j.contains("complex_c1"))
        m.complex_c1 = json_to_class(j["complex_c1"], "complex_c1");
    if (j.contains("sigma")) {
        m.sigma = json_to_int(j["sigma"], "sigma");  // claim; validate() cross-checks
    } else if (m.lattice.nondegenerate()) {
        m.sigma = m.lattice.signature().sigma();
    }
    return m;
}

Json infinitude_to_json(const IntersectionLattice&, const InfinitudeCertificate& c) {
    Json out;
    out["manifold"] = c.manifold;
    Json entries = Json::array();
    for (const InfinitudeEntry& e : c.entries) {
        Json row;
        row["k"] = int_to_json(e.k);
        row["c1K"] = class_to_json(e.canonical.c1K);
        row["square"] = int_to_json(e.invariants.square);
        row["divisibility"] = int_to_json(e.invariants.divisibility);
        row["characteristic"] = e.invariants.characteristic;
        row["primitive"] = e.invariants.primitive;
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    out["verdict"] = c.verified ? "verified" : "unverified";
    return out;
}

Json finiteness_to_json(const IntersectionLattice& l, const FinitenessCertificate& c) {
    Json out;
    out["manifold"] = c.manifold;
    out["verdict"] =
        c.verdict == FinitenessVerdict::Finite ? "finite" : "not_applicable";
    out["completeness"] = c.chern.completeness == Completeness::Complete
                              ? "complete"
                              : "window-truncated";
    out["count"] = c.chern.values.size();
    Json values = Json::array();
    for (const ChernData& d : c.chern.values) values.push_back(chern_to_json(l, d));
    out["values"] = std::move(values);
    return out;
}

} // namespace chern4

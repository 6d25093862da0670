#pragma once

#include "chern4/chern.hpp"
#include "chern4/enumeration.hpp"
#include "chern4/lattice.hpp"
#include "chern4/manifold.hpp"
#include "chern4/moduli.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace chern4 {

// Insertion-ordered objects keep CLI output byte-stable.
using Json = nlohmann::ordered_json;

/// Integers serialize as JSON numbers while they fit an int64, as decimal
/// strings beyond that; readers accept both.
Json int_to_json(const Int& x);
Int json_to_int(const Json& j, const std::string& where);

Json class_to_json(const CohClass& c);
CohClass json_to_class(const Json& j, const std::string& where);

Json chern_to_json(const IntersectionLattice& l, const ChernData& d);
Json invariants_to_json(const OrbitInvariants& inv);
Json diagnostics_to_json(const std::vector<Diagnostic>& diags);
Json manifold_to_json(const FourManifoldModel& m);

/// Schema: {name?, gram, euler, w2, sigma?, fiber?, complex_c1?}. The stored
/// sigma is kept as the model's claim for validate() to cross-check; when
/// absent it is computed from the Gram matrix. Throws ParseError on shape
/// errors and propagates lattice construction errors.
FourManifoldModel manifold_from_json(const Json& j);

Json infinitude_to_json(const IntersectionLattice& l, const InfinitudeCertificate& c);
Json finiteness_to_json(const IntersectionLattice& l, const FinitenessCertificate& c);

} // namespace chern4

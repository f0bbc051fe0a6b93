#pragma once

#include <string>

#include "json.hpp"

#include "cp1graft/circles.hpp"
#include "cp1graft/configurations.hpp"
#include "cp1graft/differentials.hpp"
#include "cp1graft/grafting.hpp"
#include "cp1graft/monodromy.hpp"
#include "cp1graft/triangles.hpp"

// JSON encodings shared by the command-line tool and the fixtures. Every
// reader throws SchemaError on a structural mismatch and ParseError on a bad
// literal. Documents carry "schema": "cp1graft/1" at the top level.
namespace cp1graft::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "cp1graft/1";

// {"schema": kSchema, "type": type}.
json document(const std::string& type);
// Checks the schema tag and returns the "type" member.
std::string document_type(const json& doc);

// Complex numbers are [re, im]; a bare number is accepted on input.
json to_json(cplx z);
cplx complex_from_json(const json& j);

// {"z1": [re, im], "z2": [re, im]}.
json to_json(const RiemannPoint& p);
RiemannPoint point_from_json(const json& j);

// {"A": a, "B": [re, im], "C": c}.
json to_json(const Circle& c);
Circle circle_from_json(const json& j);

// [[a, b], [c, d]] with complex entries.
json to_json(const MobiusMap& m);
MobiusMap map_from_json(const json& j);
json to_json(const Mat2& m);

// Exact angles as "3pi/2"; float angles as radians "%.17g".
json to_json(const AngleValue& a);
AngleValue angle_from_json(const json& j);

// {"circles": [...], "kind": ..., "pairs": [[x, y], ...]}; only the circles
// are read back, the rest is rebuilt.
json to_json(const CircleConfiguration& cfg);
CircleConfiguration configuration_from_json(const json& j);

// Read back by reclassifying "angles"; every other member must agree.
json to_json(const AtomicImmersion& a);
AtomicImmersion atomic_from_json(const json& j);

json to_json(const RealizedImmersion& r);
RealizedImmersion realized_from_json(const json& j);

// {"G_ab", "G_bc", "G_ac", "G_a", "G_b", "G_c"}.
json to_json(const GraftingMultiCurve& m);
GraftingMultiCurve curve_from_json(const json& j);

json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

json to_json(const MonodromyResult& r);

}  // namespace cp1graft::io

#pragma once

#include <json.hpp>

#include "qhsp/bending.hpp"
#include "qhsp/isometry.hpp"
#include "qhsp/surfrep.hpp"

namespace qhsp {

using Json = nlohmann::json;

//------------------------------------------------------------------------------
// JSON interchange formats
//------------------------------------------------------------------------------
// quaternion        [re, i, j, k]
// matrix            array of rows of quaternions
// exact scalars     integers or "p/q" strings (arith = "exact")
// surface rep       {"genus": g, "images": {"a1": M, ...}, "arith": "float",
//                    "tol": 1e-9}
// line              {"span": [vec, vec]}
// lamination        {"curves": [{"axis_word": "a1b1A1B1", "q": [..], "d": [..]}],
//                    "crossings": {"b2": [{"conj": "b2", "curve": 1, "sign": 1}]}}
// The crossings key may be omitted for the two built-in genus-2 scenarios
// (single separating commutator curve, or that curve plus a2).

Json quat_to_json(const Qd& q);
Qd quat_from_json(const Json& j);

Json qmat3_to_json(const QMat3& M);
QMat3 qmat3_from_json(const Json& j);

Rational rational_from_json(const Json& j);
Qr exact_quat_from_json(const Json& j);
QMat3r exact_qmat3_from_json(const Json& j);

Json surface_rep_to_json(const SurfaceRep& rep);
SurfaceRep surface_rep_from_json(const Json& j);

Json qline_to_json(const QLine& line);
QLine qline_from_json(const Json& j);

Json lamination_to_json(const MeasuredLamination& lam, int genus);
MeasuredLamination lamination_from_json(const Json& j, int genus);

Json hull_report_to_json(const HullReport& report);

/// Read/parse helpers; throw ParseError / SchemaError.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace qhsp

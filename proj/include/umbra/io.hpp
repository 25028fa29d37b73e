#pragma once

#include <string>

#include <json.hpp>

#include "umbra/catalog.hpp"
#include "umbra/operators.hpp"
#include "umbra/poly.hpp"
#include "umbra/series.hpp"
#include "umbra/triangle.hpp"

namespace umbra::io {

using nlohmann::json;

// Rationals are written as canonical "p" or "p/q" strings.
json to_json(const Series& s);
json to_json(const Poly& p);
json to_json(const ShiftOp& op);
json to_json(const DeltaOp& op);
json to_json(const Triangle& t);
json to_json(const Matrix& m);
json to_json(const Report& r);

Series series_from_json(const json& j);
Poly poly_from_json(const json& j);
ShiftOp shiftop_from_json(const json& j);
DeltaOp deltaop_from_json(const json& j);
Triangle triangle_from_json(const json& j);
Matrix matrix_from_json(const json& j);
Report report_from_json(const json& j);

std::string triangle_tsv(const Triangle& t);

}  // namespace umbra::io

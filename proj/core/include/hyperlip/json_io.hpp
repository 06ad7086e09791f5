#pragma once

// JSON forms of the core types.
//
//   Point          [x1, ..., xn]
//   ExtendedReal   number | "-inf" | "+inf"
//   LipExpr        {"type": "const", "value": c}
//                  {"type": "distcone", "center": [...], "offset": o, "scale": s, "orientation": "+"|"-"}
//                  {"type": "min"|"max", "children": [...]}
//                  {"type": "blend", "inner": {...}, "factor": f, "anchor": a}
//                  {"type": "mcshane", "mode": "inf"|"sup", "scale": s, "samples": [{"point": [...], "value": v}]}
//                  {"type": "inf", "sign": "+"|"-"}
//   BoxLipschitzSet {"n": n, "lower": [LipExpr | "-inf"], "upper": [LipExpr | "+inf"]}
//   DistanceMatrix [[...], ...]
//   ConeDescriptor {"apex": [...], "axis": i, "sign": "+"|"-"}
//   Box            {"lo": [...], "hi": [...]}
//
// Malformed input raises InputError.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hyperlip/boxset.hpp"
#include "hyperlip/geometry.hpp"
#include "hyperlip/lipfun.hpp"
#include "hyperlip/metric_space.hpp"

namespace hyperlip::io {

using Json = nlohmann::json;

Json to_json(const Point& p);
Point point_from_json(const Json& j);

Json to_json(const std::vector<Point>& pts);
std::vector<Point> points_from_json(const Json& j);

Json to_json(const ExtendedReal& v);
ExtendedReal extended_from_json(const Json& j);

Json to_json(const LipExpr& f);
LipExpr lipexpr_from_json(const Json& j);

Json to_json(const BoxLipschitzSet& q);
BoxLipschitzSet boxset_from_json(const Json& j);

Json matrix_to_json(const DistanceMatrix& d);
DistanceMatrix matrix_from_json(const Json& j);

Json to_json(const ConeDescriptor& c);
ConeDescriptor cone_from_json(const Json& j);

Json to_json(const Box& b);
Box box_from_json(const Json& j);

/// Parses text, mapping parse failures to InputError.
Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hyperlip::io

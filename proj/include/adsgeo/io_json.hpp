#pragma once
#include <stdexcept>
#include <string>

#include "adsgeo/parametric.hpp"

namespace ads {

// Malformed or schema-violating input. Not an AdsError: the CLI treats it as a
// usage problem (exit 2). line/column are 1-based, 0 when unknown.
struct InputFormatError : std::runtime_error {
  int line = 0, column = 0;
  InputFormatError(const std::string& msg, int l = 0, int c = 0);
};

// Curve:   {"dim": 5, "domain": [a,b], "coords": [[term, ...], ...]}
//          term = {"kind": "cos"|"sin"|"poly", "coeff": c, "freq": w, "power": p}
// Surface: {"dim": 5, "domain_u": [a,b], "domain_v": [c,d], "coords": [...],
//           "reference": [..5 numbers..]}   (reference optional)
//          surface terms take "freq": [wu,wv] and "power": [pu,pv]
// "name" is optional for both. A surface is recognised by domain_u.
// Curves that are not unit speed (or leave AdS) are rejected with InputError.
Geometry geometry_from_json(const std::string& text, const ToleranceConfig& cfg = {},
                            int validate_samples = 200);
Geometry load_geometry_file(const std::string& path, const ToleranceConfig& cfg = {});

// inverse of geometry_from_json for ParamCurve / ParamSurface objects
std::string geometry_to_json(const Geometry& g);

}  // namespace ads

#pragma once

#include <string>

#include <json.hpp>

#include "kdim/gevrey.hpp"
#include "kdim/metric_entropy.hpp"
#include "kdim/point_cloud.hpp"
#include "kdim/psi.hpp"

namespace kdim::io {

using json = nlohmann::ordered_json;

// {"ambient_dim": n, "points": [[re, im, ...]], "metric": "sup",
//  "enclosing": {"center": [re, im, ...], "radius": R}}   (enclosing optional)
PointCloud cloud_from_json(const json& j);
json cloud_to_json(const PointCloud& c);

// {"nvars": n, "terms": [{"alpha": [...], "re": x, "im": y}]}
poly::Poly poly_from_json(const json& j);
json poly_to_json(const poly::Poly& p);
// integer variant: terms carry {"alpha": [...], "coeff": "decimal-string"}
poly::IntPoly int_poly_from_json(const json& j);
json int_poly_to_json(const poly::IntPoly& p);

// {"eps": [...], "samples": m, "seed": u}
psi::EpsSchedule schedule_from_json(const json& j);
json schedule_to_json(const psi::EpsSchedule& s);

json entropy_report_to_json(const metric::EntropyReport& r);

// family spec: {"kind": "zero" | "polynomial" | "rational" | "lacunary" | "exp",
//               "s": ..., "box": [lo, hi], "num": [...], "den": [...],
//               "scale": ..., "shift": ...}  (rational strings for num/den)
gevrey::GevreyFamily family_from_json(const json& j);
// graph: {"m": ..., "n": ..., "h": [spec...], "H": [spec...], "box": [[lo,hi]...]}
gevrey::GevreyGraph graph_from_json(const json& j);

// Deterministic serialization: objects keep insertion order (we only build
// ordered documents), floats print with 17 significant digits.
std::string dump_deterministic(const json& j, int indent = 2);

std::string format_double(double v);  // %.17g

}  // namespace kdim::io

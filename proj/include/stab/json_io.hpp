#pragma once

#include "stab/bundle.hpp"
#include "stab/polytope.hpp"
#include "stab/spectrum.hpp"
#include "stab/toric_integrals.hpp"

#include <json.hpp>

#include <string>

namespace stab {

using Json = nlohmann::json;

// Wrappers around the JSON parser that convert parse failures into BadInput
// with the byte position, so the command line can report malformed files
// uniformly.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

// Rationals travel as strings "num/den" (bare integers are accepted on
// input) so values round-trip without precision loss.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"pieces": [{"rank": r, "degree": d, "multiplicity": m}, ...]}
BundleSpec bundle_spec_from_json(const Json& j);
Json to_json(const BundleSpec& spec);

// {"n": n, "r": r, "weights": {"k": [w, w, ...], ...}}, weights listed with
// multiplicity
WeightSpectrum spectrum_from_json(const Json& j);
Json to_json(const WeightSpectrum& spec);

// {"n": n, "vertices": [[...], ...], "facets": [{"normal": [...], "offset": o}, ...]}
LatticePolytope polytope_from_json(const Json& j);
Json to_json(const LatticePolytope& p);

// {"pieces": [{"c": [...], "d": d}, ...]}
PLConvexFunction pl_function_from_json(const Json& j);
Json to_json(const PLConvexFunction& f);

// {"epsilon": e} with an optional "resolution" entry (grid points for
// sampled reports; quadrature itself is adaptive)
struct MetricParams {
    double epsilon = 0.0;
    int resolution = 512;
};
MetricParams metric_params_from_json(const Json& j);

Json to_json(const ConfigInvariants& inv);
Json to_json(const LowerBoundReport& report);
Json to_json(const MomentRateReport& report);

} // namespace stab

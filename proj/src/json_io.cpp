#include "stab/json_io.hpp"

#include "stab/errors.hpp"

#include <fstream>
#include <sstream>

namespace stab {

namespace {

long long integer_field(const Json& j, const char* name) {
    if (!j.contains(name) || !j.at(name).is_number_integer())
        throw BadInput(std::string("expected integer field '") + name + "'");
    return j.at(name).get<long long>();
}

std::vector<long long> integer_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw BadInput(std::string(what) + " must be an array of integers");
    std::vector<long long> out;
    out.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_number_integer())
            throw BadInput(std::string(what) + " must contain only integers");
        out.push_back(entry.get<long long>());
    }
    return out;
}

} // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw BadInput(std::string("JSON parse error: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

Json rational_to_json(const Rational& q) { return Json(q.str()); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw BadInput("rational values must be integers or strings 'num/den'");
}

BundleSpec bundle_spec_from_json(const Json& j) {
    if (!j.contains("pieces") || !j.at("pieces").is_array())
        throw BadInput("bundle spec needs a 'pieces' array");
    BundleSpec spec;
    for (const auto& piece : j.at("pieces")) {
        BundlePiece p;
        p.rank = integer_field(piece, "rank");
        p.degree = integer_field(piece, "degree");
        p.multiplicity = piece.contains("multiplicity") ? integer_field(piece, "multiplicity") : 1;
        if (p.rank <= 0) throw BadInput("piece ranks must be positive");
        if (p.multiplicity <= 0) throw BadInput("piece multiplicities must be positive");
        spec.pieces.push_back(p);
    }
    if (spec.pieces.empty()) throw BadInput("bundle spec needs at least one piece");
    return spec;
}

Json to_json(const BundleSpec& spec) {
    Json pieces = Json::array();
    for (const auto& p : spec.pieces)
        pieces.push_back(
            {{"rank", p.rank}, {"degree", p.degree}, {"multiplicity", p.multiplicity}});
    return Json{{"pieces", pieces}};
}

WeightSpectrum spectrum_from_json(const Json& j) {
    WeightSpectrum spec;
    spec.n = static_cast<int>(integer_field(j, "n"));
    spec.r = j.contains("r") ? integer_field(j, "r") : 1;
    if (!j.contains("weights") || !j.at("weights").is_object())
        throw BadInput("spectrum needs a 'weights' object keyed by k");
    for (const auto& [key, value] : j.at("weights").items()) {
        long long k = 0;
        try {
            std::size_t used = 0;
            k = std::stoll(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw BadInput("weights keys must be integers, got '" + key + "'");
        }
        spec.weights[k] = integer_vector(value, "weight list");
    }
    return spec;
}

Json to_json(const WeightSpectrum& spec) {
    Json weights = Json::object();
    for (const auto& [k, list] : spec.weights) weights[std::to_string(k)] = list;
    return Json{{"n", spec.n}, {"r", spec.r}, {"weights", weights}};
}

LatticePolytope polytope_from_json(const Json& j) {
    LatticePolytope p;
    p.n = static_cast<int>(integer_field(j, "n"));
    if (!j.contains("vertices") || !j.at("vertices").is_array())
        throw BadInput("polytope needs a 'vertices' array");
    for (const auto& v : j.at("vertices")) p.vertices.push_back(integer_vector(v, "vertex"));
    if (!j.contains("facets") || !j.at("facets").is_array())
        throw BadInput("polytope needs a 'facets' array");
    for (const auto& f : j.at("facets")) {
        Facet facet;
        if (!f.contains("normal")) throw BadInput("facet needs a 'normal' array");
        facet.normal = integer_vector(f.at("normal"), "facet normal");
        facet.offset = integer_field(f, "offset");
        p.facets.push_back(facet);
    }
    return p;
}

Json to_json(const LatticePolytope& p) {
    Json facets = Json::array();
    for (const auto& f : p.facets) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
    return Json{{"n", p.n}, {"vertices", p.vertices}, {"facets", facets}};
}

PLConvexFunction pl_function_from_json(const Json& j) {
    if (!j.contains("pieces") || !j.at("pieces").is_array())
        throw BadInput("piecewise-linear function needs a 'pieces' array");
    PLConvexFunction f;
    for (const auto& piece : j.at("pieces")) {
        PLPiece p;
        if (!piece.contains("c")) throw BadInput("piece needs a coefficient array 'c'");
        p.c = integer_vector(piece.at("c"), "piece coefficients");
        p.d = integer_field(piece, "d");
        f.pieces.push_back(p);
    }
    if (f.pieces.empty()) throw BadInput("piecewise-linear function needs at least one piece");
    return f;
}

Json to_json(const PLConvexFunction& f) {
    Json pieces = Json::array();
    for (const auto& p : f.pieces) pieces.push_back({{"c", p.c}, {"d", p.d}});
    return Json{{"pieces", pieces}};
}

MetricParams metric_params_from_json(const Json& j) {
    MetricParams params;
    if (!j.contains("epsilon") || !j.at("epsilon").is_number())
        throw BadInput("metric description needs a numeric 'epsilon'");
    params.epsilon = j.at("epsilon").get<double>();
    if (j.contains("resolution")) {
        params.resolution = static_cast<int>(integer_field(j, "resolution"));
        if (params.resolution < 2) throw BadInput("resolution must be at least 2");
    }
    return params;
}

Json to_json(const ConfigInvariants& inv) {
    Json np = Json::object();
    for (const auto& [p, value] : inv.np_pow)
        np[std::to_string(p)] = rational_to_json(value);
    Json psi_hat = Json::object();
    for (const auto& [p, value] : inv.psi_hat) psi_hat[std::to_string(p)] = value.str();
    return Json{{"n", inv.n},
                {"r", inv.r},
                {"a0", rational_to_json(inv.a0)},
                {"a1", rational_to_json(inv.a1)},
                {"b0", rational_to_json(inv.b0)},
                {"b1", rational_to_json(inv.b1)},
                {"Q", rational_to_json(inv.Q)},
                {"Np_pow_p", np},
                {"futaki", rational_to_json(inv.futaki)},
                {"psi", inv.psi.str()},
                {"psi_hat", psi_hat}};
}

Json to_json(const LowerBoundReport& report) {
    Json j{{"invariants", to_json(report.inv)},
           {"destabilizing", report.destabilizing},
           {"N2_squared", rational_to_json(report.n2_centered)},
           {"N2_squared_from_b1", rational_to_json(report.n2_alternative)},
           {"note", report.note}};
    if (report.destabilizing) {
        j["nu_star"] = rational_to_json(report.nu_star);
        j["twisted_supremum"] = report.sup.str();
    }
    return j;
}

Json to_json(const MomentRateReport& report) {
    auto entries = [](const std::vector<RateEntry>& list) {
        Json out = Json::array();
        for (const auto& e : list)
            out.push_back({{"k", e.k}, {"residual", rational_to_json(e.residual)}});
        return out;
    };
    Json centered = Json::object();
    for (const auto& [r, list] : report.centered_residuals) {
        centered[std::to_string(r)] = {
            {"target", rational_to_json(report.centered_targets.at(r))},
            {"residuals", entries(list)},
            {"rate_constant", rational_to_json(report.centered_rate_constants.at(r))}};
    }
    return Json{{"volume", rational_to_json(report.volume)},
                {"mean_target", rational_to_json(report.target_mean)},
                {"mean_residuals", entries(report.mean_residuals)},
                {"mean_rate_constant", rational_to_json(report.mean_rate_constant)},
                {"centered", centered}};
}

} // namespace stab

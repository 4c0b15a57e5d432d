#include "json_io.hpp"

#include <cmath>

#include "error.hpp"

namespace hhc {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

double get_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ParseError(std::string("json: missing or non-numeric field '") + key + "'");
    return j[key].get<double>();
}

std::string get_type(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("json: expected an object with a string 'type' field");
    return j["type"].get<std::string>();
}

std::vector<std::vector<double>> get_tuples(const json& j, const char* key, std::size_t arity) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("json: missing array field '") + key + "'");
    std::vector<std::vector<double>> out;
    for (const auto& row : j[key]) {
        if (!row.is_array() || row.size() != arity)
            throw ParseError(std::string("json: entries of '") + key + "' must be arrays of " +
                             std::to_string(arity) + " numbers");
        std::vector<double> t;
        for (const auto& x : row) {
            if (!x.is_number()) throw ParseError("json: non-numeric coordinate");
            t.push_back(x.get<double>());
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

ConvexBody body_from_json(const json& j) {
    const std::string type = get_type(j);
    if (type == "polygon2") {
        std::vector<Vec2> vs;
        for (const auto& row : get_tuples(j, "vertices", 2)) vs.push_back({row[0], row[1]});
        return make_body(make_polygon(std::move(vs)));
    }
    if (type == "polytope3") {
        std::vector<Vec3> vs;
        for (const auto& row : get_tuples(j, "vertices", 3))
            vs.push_back({row[0], row[1], row[2]});
        return make_body(make_polytope(vs));
    }
    if (type == "profile") {
        if (!j.contains("dim") || !j["dim"].is_number_integer())
            throw ParseError("json: profile needs an integer 'dim'");
        int dim = j["dim"].get<int>();
        std::vector<std::pair<double, double>> knots;
        for (const auto& row : get_tuples(j, "knots", 2)) knots.emplace_back(row[0], row[1]);
        if (knots.size() < 2) throw ParseError("json: profile needs at least two knots");
        double t0 = get_number(j, "t0"), t1 = get_number(j, "t1");
        double span = std::max(1e-30, knots.back().first - knots.front().first);
        if (std::abs(t0 - knots.front().first) > 1e-9 * span ||
            std::abs(t1 - knots.back().first) > 1e-9 * span)
            throw ParseError("json: profile t0/t1 must match the first/last knot");
        return make_body(make_profile(dim, std::move(knots)));
    }
    throw ParseError("json: unknown body type '" + type + "'");
}

ConvexBody body_from_json_text(const std::string& text) { return body_from_json(parse_text(text)); }

json body_to_json(const ConvexBody& body) {
    json j;
    if (const auto* poly = std::get_if<Polygon2>(&body.shape)) {
        j["type"] = "polygon2";
        json vs = json::array();
        for (const auto& v : poly->vertices) vs.push_back({v[0], v[1]});
        j["vertices"] = std::move(vs);
        return j;
    }
    if (const auto* pt = std::get_if<Polytope3>(&body.shape)) {
        j["type"] = "polytope3";
        json vs = json::array();
        for (const auto& v : pt->vertices) vs.push_back({v[0], v[1], v[2]});
        j["vertices"] = std::move(vs);
        return j;
    }
    const Profile& pr = std::get<ProfileBody>(body.shape).profile;
    j["type"] = "profile";
    j["dim"] = pr.dim;
    j["t0"] = pr.t0();
    j["t1"] = pr.t1();
    json ks = json::array();
    for (std::size_t i = 0; i < pr.ts.size(); ++i) ks.push_back({pr.ts[i], pr.vs[i]});
    j["knots"] = std::move(ks);
    return j;
}

namespace {

Affine affine_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gradient") || !j["gradient"].is_array())
        throw ParseError("json: affine piece needs a 'gradient' array");
    Point g;
    for (const auto& x : j["gradient"]) {
        if (!x.is_number()) throw ParseError("json: non-numeric gradient entry");
        g.push_back(x.get<double>());
    }
    return Affine{std::move(g), get_number(j, "offset")};
}

}  // namespace

ConcaveFunction function_from_json(const json& j) {
    const std::string type = get_type(j);
    if (type == "affine") {
        Affine a = affine_from_json(j);
        return make_affine(std::move(a.gradient), a.offset);
    }
    if (type == "min-affine") {
        if (!j.contains("pieces") || !j["pieces"].is_array() || j["pieces"].empty())
            throw ParseError("json: min-affine needs a nonempty 'pieces' array");
        std::vector<Affine> pieces;
        for (const auto& pj : j["pieces"]) pieces.push_back(affine_from_json(pj));
        return make_min_affine(std::move(pieces));
    }
    throw ParseError("json: unknown function type '" + type + "'");
}

ConcaveFunction function_from_json_text(const std::string& text) {
    return function_from_json(parse_text(text));
}

json function_to_json(const ConcaveFunction& f) {
    auto piece_json = [](const Affine& a) {
        json p;
        p["gradient"] = a.gradient;
        p["offset"] = a.offset;
        return p;
    };
    json j;
    if (f.is_affine()) {
        j = piece_json(f.pieces.front());
        j["type"] = "affine";
        return j;
    }
    j["type"] = "min-affine";
    json ps = json::array();
    for (const auto& p : f.pieces) ps.push_back(piece_json(p));
    j["pieces"] = std::move(ps);
    return j;
}

ConvexGauge gauge_from_json(const json& j) {
    const std::string type = get_type(j);
    if (type == "power") return power_gauge(get_number(j, "alpha"));
    if (type == "exp") return exp_gauge();
    if (type == "exp-square") return exp_square_gauge();
    if (type == "pwl-convex") {
        std::vector<std::pair<double, double>> knots;
        for (const auto& row : get_tuples(j, "knots", 2)) knots.emplace_back(row[0], row[1]);
        return pwl_gauge(std::move(knots));
    }
    throw ParseError("json: unknown gauge type '" + type + "'");
}

ConvexGauge gauge_from_json_text(const std::string& text) {
    return gauge_from_json(parse_text(text));
}

json gauge_to_json(const ConvexGauge& g) {
    json j;
    switch (g.kind) {
        case ConvexGauge::Kind::power:
            j["type"] = "power";
            j["alpha"] = g.alpha;
            break;
        case ConvexGauge::Kind::exp_minus_one:
            j["type"] = "exp";
            break;
        case ConvexGauge::Kind::exp_square_minus_one:
            j["type"] = "exp-square";
            break;
        case ConvexGauge::Kind::pwl: {
            j["type"] = "pwl-convex";
            json ks = json::array();
            for (const auto& [t, y] : g.knots) ks.push_back({t, y});
            j["knots"] = std::move(ks);
            break;
        }
    }
    return j;
}

json cone_to_json(const TruncatedCone& cone) {
    json j;
    j["n"] = cone.dim;
    j["t0"] = cone.t0;
    j["t1"] = cone.t1;
    j["r"] = cone.r;
    j["m"] = cone.m;
    j["t_R"] = cone.t_median;
    return j;
}

json center_to_json(const CenterResult& res) {
    json j;
    j["point"] = res.point;
    j["direction"] = res.direction;
    j["t_value"] = res.t_value;
    j["cone"] = cone_to_json(res.cone);
    j["f_at_center"] = res.f_at_center;
    j["diagnostics"] = {{"tie_broken", res.tie_broken}, {"start_point", res.start_point}};
    return j;
}

json bound_report_to_json(const BoundReport& rep) {
    json j;
    j["bound"] = rep.bound;
    j["argmax_m"] = rep.argmax_m;
    j["t_m"] = rep.t_m;
    j["r_m"] = rep.r_m;
    j["n"] = rep.n;
    j["c"] = rep.c;
    j["f0"] = rep.f0;
    j["method"] = rep.method;
    return j;
}

json record_to_json(const VerificationRecord& rec) {
    json j;
    j["instance"] = rec.instance;
    j["body"] = rec.body_summary;
    j["function"] = rec.function_summary;
    j["gauge"] = rec.gauge_summary;
    j["integral"] = rec.integral;
    j["bound"] = rec.bound;
    j["slack"] = rec.slack;
    j["center"] = center_to_json(rec.center);
    j["status"] = rec.status;
    if (rec.seed) j["seed"] = *rec.seed;
    return j;
}

json repro_to_json(const std::vector<ReproRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json j;
        j["name"] = row.name;
        j["stated"] = row.stated;
        j["computed"] = row.computed;
        j["argmax_m"] = row.argmax_m;
        j["flagged"] = row.flagged;
        if (!row.note.empty()) j["note"] = row.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace hhc

#include "hhcenter.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "core/bounds.hpp"
#include "core/center.hpp"
#include "core/conesolver.hpp"
#include "core/error.hpp"
#include "core/functions.hpp"
#include "core/geometry.hpp"
#include "core/json_io.hpp"
#include "core/symmetrize.hpp"
#include "core/tolerances.hpp"
#include "core/verify.hpp"

struct hhc_body {
    hhc::ConvexBody value;
};
struct hhc_function {
    hhc::ConcaveFunction value;
};
struct hhc_gauge {
    hhc::ConvexGauge value;
};

namespace {

thread_local std::string g_last_error;

hhc_status fail(hhc_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
hhc_status guarded(Fn&& fn) {
    try {
        fn();
        return HHC_OK;
    } catch (const hhc::ParseError& e) {
        return fail(HHC_PARSE_ERROR, e.what());
    } catch (const hhc::DegenerateError& e) {
        return fail(HHC_DEGENERATE, e.what());
    } catch (const hhc::InvalidArgumentError& e) {
        return fail(HHC_INVALID_ARGUMENT, e.what());
    } catch (const hhc::UnsupportedError& e) {
        return fail(HHC_UNSUPPORTED, e.what());
    } catch (const std::exception& e) {
        return fail(HHC_ERROR, e.what());
    } catch (...) {
        return fail(HHC_ERROR, "unknown exception");
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hhc::Point make_point(const double* u, int dim) {
    return hhc::Point(u, u + dim);
}

int parse_plane(const char* plane) {
    std::string p = plane ? plane : "";
    if (p == "xy") return 0;
    if (p == "xz") return 1;
    if (p == "yz") return 2;
    throw hhc::InvalidArgumentError("plane must be one of xy, xz, yz");
}

const hhc::Polytope3& as_polytope(const hhc_body* body) {
    if (const auto* pt = std::get_if<hhc::Polytope3>(&body->value.shape)) return *pt;
    throw hhc::InvalidArgumentError("operation requires a polytope3 body");
}

}  // namespace

extern "C" {

hhc_status hhc_body_parse(const char* json, hhc_body** out) {
    if (!json || !out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new hhc_body{hhc::body_from_json_text(json)}; });
}

void hhc_body_free(hhc_body* body) { delete body; }

hhc_status hhc_function_parse(const char* json, hhc_function** out) {
    if (!json || !out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new hhc_function{hhc::function_from_json_text(json)}; });
}

void hhc_function_free(hhc_function* f) { delete f; }

hhc_status hhc_gauge_parse(const char* json, hhc_gauge** out) {
    if (!json || !out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new hhc_gauge{hhc::gauge_from_json_text(json)}; });
}

void hhc_gauge_free(hhc_gauge* gauge) { delete gauge; }

void hhc_free_string(char* s) { delete[] s; }

const char* hhc_last_error(void) { return g_last_error.c_str(); }

const char* hhc_version(void) { return "1.0.0"; }

hhc_status hhc_body_dim(const hhc_body* body, int* out) {
    if (!body || !out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = body->value.dim(); });
}

hhc_status hhc_volume(const hhc_body* body, double* out) {
    if (!body || !out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = hhc::volume(body->value); });
}

hhc_status hhc_centroid(const hhc_body* body, double* coords, int* dim) {
    if (!body || !coords || !dim) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hhc::Point c = hhc::centroid(body->value);
        *dim = static_cast<int>(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) coords[i] = c[i];
    });
}

hhc_status hhc_section_measure(const hhc_body* body, const double* u, int dim, double t,
                               double* out) {
    if (!body || !u || !out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = hhc::section_measure(body->value, make_point(u, dim), t); });
}

hhc_status hhc_support_interval(const hhc_body* body, const double* u, int dim, double* t0,
                                double* t1) {
    if (!body || !u || !t0 || !t1) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto [lo, hi] = hhc::support_interval(body->value, make_point(u, dim));
        *t0 = lo;
        *t1 = hi;
    });
}

hhc_status hhc_project_shadow(const hhc_body* body, const char* plane, char** polygon_json) {
    if (!body || !polygon_json) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hhc::Polygon2 shadow = hhc::project_shadow(as_polytope(body), parse_plane(plane));
        *polygon_json = dup_string(hhc::body_to_json(hhc::make_body(shadow)).dump());
    });
}

hhc_status hhc_schwarz_profile(const hhc_body* body, const double* u, int dim, int knot_count,
                               char** profile_json) {
    if (!body || !u || !profile_json) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        int kc = knot_count == 0 ? hhc::tol::default_knots : knot_count;
        hhc::Profile p = hhc::schwarz_profile(body->value, make_point(u, dim), kc);
        *profile_json = dup_string(hhc::body_to_json(hhc::make_body(p)).dump());
    });
}

hhc_status hhc_equal_split_cone(const char* profile_json, char** cone_json) {
    if (!profile_json || !cone_json) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hhc::ConvexBody body = hhc::body_from_json_text(profile_json);
        const auto* pb = std::get_if<hhc::ProfileBody>(&body.shape);
        if (!pb) throw hhc::InvalidArgumentError("equal_split_cone expects a profile body");
        hhc::TruncatedCone cone = hhc::equal_split_cone(pb->profile);
        *cone_json = dup_string(hhc::cone_to_json(cone).dump());
    });
}

hhc_status hhc_max_slope(int n, double c, double length, double* out) {
    if (!out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = hhc::max_slope(n, c, length); });
}

hhc_status hhc_solve_r(int n, double c, double m, double length, double* out) {
    if (!out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = hhc::solve_r(n, c, m, length); });
}

hhc_status hhc_median_t(int n, double r, double m, double* out) {
    if (!out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = hhc::median_t(n, r, m); });
}

hhc_status hhc_find_center(const hhc_body* body, const hhc_function* f, const double* start,
                           int knot_count, char** center_json) {
    if (!body || !f || !center_json) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::optional<hhc::Point> x0;
        if (start) x0 = make_point(start, body->value.dim());
        int kc = knot_count == 0 ? hhc::tol::default_knots : knot_count;
        hhc::CenterResult res = hhc::find_center(body->value, f->value, x0, kc);
        *center_json = dup_string(hhc::center_to_json(res).dump());
    });
}

hhc_status hhc_reduced_bound(int n, double c, double f0, const hhc_gauge* gauge,
                             char** report_json) {
    if (!gauge || !report_json) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hhc::BoundReport rep = hhc::reduced_bound(n, c, f0, gauge->value);
        *report_json = dup_string(hhc::bound_report_to_json(rep).dump());
    });
}

hhc_status hhc_bound_trace_csv(int n, double c, double f0, const hhc_gauge* gauge, char** csv) {
    if (!gauge || !csv) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto trace = hhc::reduced_bound_trace(n, c, f0, gauge->value);
        std::ostringstream os;
        os.precision(17);
        os << "m,F\n";
        for (const auto& [m, F] : trace) os << m << "," << F << "\n";
        *csv = dup_string(os.str());
    });
}

hhc_status hhc_power_bound_2d(double alpha, double c, double f0, double* out) {
    if (!out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = hhc::power_bound_2d(alpha, c, f0); });
}

hhc_status hhc_conjecture_bound(int n, double f0, const hhc_gauge* gauge, double* out) {
    if (!gauge || !out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = hhc::conjecture_bound(n, f0, gauge->value); });
}

hhc_status hhc_params_2d(double c, double m, double* r, double* t) {
    if (!r || !t) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto [rr, tt] = hhc::params_2d(c, m);
        *r = rr;
        *t = tt;
    });
}

hhc_status hhc_params_3d(double c, double m, double* r, double* t) {
    if (!r || !t) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto [rr, tt] = hhc::params_3d(c, m);
        *r = rr;
        *t = tt;
    });
}

hhc_status hhc_erfi(double x, double* out) {
    if (!out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = hhc::erfi(x); });
}

hhc_status hhc_integrate(const hhc_body* body, const hhc_function* f, const hhc_gauge* gauge,
                         double* out) {
    if (!body || !f || !gauge || !out) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = hhc::integrate_phi_f(body->value, f->value, gauge->value); });
}

hhc_status hhc_check_inequality(const hhc_body* body, const hhc_function* f,
                                const hhc_gauge* gauge, const char* instance_id,
                                char** record_json) {
    if (!body || !f || !gauge || !record_json) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hhc::VerificationRecord rec = hhc::check_inequality(
            body->value, f->value, gauge->value, instance_id ? instance_id : "");
        *record_json = dup_string(hhc::record_to_json(rec).dump());
    });
}

hhc_status hhc_random_instance(uint64_t seed, int dim, char** body_json, char** function_json) {
    if (!body_json || !function_json) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto [body, f] = hhc::random_instance(seed, dim);
        *body_json = dup_string(hhc::body_to_json(body).dump());
        *function_json = dup_string(hhc::function_to_json(f).dump());
    });
}

hhc_status hhc_section_bound_check(const hhc_body* body, const char* plane, char** record_json) {
    if (!body || !record_json) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hhc::VerificationRecord rec =
            hhc::section_bound_check(as_polytope(body), parse_plane(plane));
        *record_json = dup_string(hhc::record_to_json(rec).dump());
    });
}

hhc_status hhc_repro_table(char** rows_json) {
    if (!rows_json) return fail(HHC_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *rows_json = dup_string(hhc::repro_to_json(hhc::repro_table()).dump()); });
}

}  // extern "C"

/* hhcenter: sharp truncated-cone upper bounds for averages of convex gauges
 * of concave functions over convex bodies, and the center point they hinge
 * on. C interface: opaque handles, status codes, JSON payloads.
 *
 * All functions returning hhc_status leave a human-readable explanation in
 * hhc_last_error() (thread-local) on failure. Strings returned through
 * char** are heap-allocated; release with hhc_free_string(). Handles are
 * released with the matching *_free function. All operations are pure and
 * thread-safe: handles may be shared across threads for reads.
 */
#ifndef HHCENTER_H
#define HHCENTER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hhc_status {
    HHC_OK = 0,
    HHC_ERROR = 1,             /* unexpected internal failure */
    HHC_PARSE_ERROR = 2,       /* malformed input or schema violation */
    HHC_DEGENERATE = 3,        /* degenerate geometry (flat body, empty slice) */
    HHC_INVALID_ARGUMENT = 4,  /* precondition violated (|m| > m0, alpha < 1, ...) */
    HHC_UNSUPPORTED = 5        /* operation undefined for this input class */
} hhc_status;

typedef struct hhc_body hhc_body;         /* convex body */
typedef struct hhc_function hhc_function; /* nonnegative concave function */
typedef struct hhc_gauge hhc_gauge;       /* convex gauge phi, phi(0) = 0 */

/* ---- lifecycle ------------------------------------------------------- */

/* Body schema:
 *   {"type":"polygon2","vertices":[[x,y],...]}                (ccw convex)
 *   {"type":"polytope3","vertices":[[x,y,z],...]}             (hull taken)
 *   {"type":"profile","dim":n,"t0":..,"t1":..,"knots":[[t,v],...]}
 */
hhc_status hhc_body_parse(const char* json, hhc_body** out);
void hhc_body_free(hhc_body* body);

/* Function schema:
 *   {"type":"affine","gradient":[...],"offset":r}
 *   {"type":"min-affine","pieces":[{"gradient":[...],"offset":r},...]}
 */
hhc_status hhc_function_parse(const char* json, hhc_function** out);
void hhc_function_free(hhc_function* f);

/* Gauge schema:
 *   {"type":"power","alpha":a} | {"type":"exp"} | {"type":"exp-square"}
 *   {"type":"pwl-convex","knots":[[t,y],...]}
 */
hhc_status hhc_gauge_parse(const char* json, hhc_gauge** out);
void hhc_gauge_free(hhc_gauge* gauge);

void hhc_free_string(char* s);
const char* hhc_last_error(void);
const char* hhc_version(void);

/* ---- elementary geometry --------------------------------------------- */

hhc_status hhc_body_dim(const hhc_body* body, int* out);
hhc_status hhc_volume(const hhc_body* body, double* out);
/* coords must hold at least the body dimension; *dim receives it. */
hhc_status hhc_centroid(const hhc_body* body, double* coords, int* dim);
/* u: unit vector of the body dimension. */
hhc_status hhc_section_measure(const hhc_body* body, const double* u, int dim, double t,
                               double* out);
hhc_status hhc_support_interval(const hhc_body* body, const double* u, int dim, double* t0,
                                double* t1);
/* plane: "xy", "xz" or "yz"; body must be a polytope3. Returns the shadow
 * polygon as body JSON. */
hhc_status hhc_project_shadow(const hhc_body* body, const char* plane, char** polygon_json);

/* ---- symmetrization and cones ---------------------------------------- */

/* Returns the Schwarz profile as body JSON ("profile" type). knot_count >= 33;
 * pass 0 for the default (1025). */
hhc_status hhc_schwarz_profile(const hhc_body* body, const double* u, int dim, int knot_count,
                               char** profile_json);
/* profile_json: a "profile" body. Returns
 * {"n":..,"t0":..,"t1":..,"r":..,"m":..,"t_R":..}. */
hhc_status hhc_equal_split_cone(const char* profile_json, char** cone_json);

hhc_status hhc_max_slope(int n, double c, double length, double* out);
hhc_status hhc_solve_r(int n, double c, double m, double length, double* out);
hhc_status hhc_median_t(int n, double r, double m, double* out);

/* ---- center and bounds ------------------------------------------------ */

/* start: optional start point of the supporting affine (NULL = centroid),
 * length = body dimension. knot_count as above (0 = default). */
hhc_status hhc_find_center(const hhc_body* body, const hhc_function* f, const double* start,
                           int knot_count, char** center_json);

hhc_status hhc_reduced_bound(int n, double c, double f0, const hhc_gauge* gauge,
                             char** report_json);
/* CSV text "m,F\n..." of the coarse optimizer scan. */
hhc_status hhc_bound_trace_csv(int n, double c, double f0, const hhc_gauge* gauge, char** csv);

hhc_status hhc_power_bound_2d(double alpha, double c, double f0, double* out);
hhc_status hhc_conjecture_bound(int n, double f0, const hhc_gauge* gauge, double* out);
hhc_status hhc_params_2d(double c, double m, double* r, double* t);
hhc_status hhc_params_3d(double c, double m, double* r, double* t);
hhc_status hhc_erfi(double x, double* out);

/* ---- verification ------------------------------------------------------ */

hhc_status hhc_integrate(const hhc_body* body, const hhc_function* f, const hhc_gauge* gauge,
                         double* out);
/* One verification record as JSON; "status" is ok | violation |
 * equality-within-tol. A violation is reported in the record, not as a
 * status code. */
hhc_status hhc_check_inequality(const hhc_body* body, const hhc_function* f,
                                const hhc_gauge* gauge, const char* instance_id,
                                char** record_json);
hhc_status hhc_random_instance(uint64_t seed, int dim, char** body_json, char** function_json);
/* plane: "xy", "xz" or "yz"; body must be a polytope3. */
hhc_status hhc_section_bound_check(const hhc_body* body, const char* plane, char** record_json);
/* JSON array of rows {name, stated, computed, argmax_m, flagged, note}. */
hhc_status hhc_repro_table(char** rows_json);

#ifdef __cplusplus
}
#endif

#endif /* HHCENTER_H */

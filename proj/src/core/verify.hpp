#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "center.hpp"
#include "functions.hpp"
#include "geometry.hpp"

namespace hhc {

struct VerificationRecord {
    std::string instance;
    std::string body_summary;
    std::string function_summary;
    std::string gauge_summary;
    double integral = 0.0;
    double bound = 0.0;
    double slack = 0.0;  // bound - integral
    CenterResult center;
    std::string status;  // ok | violation | equality-within-tol
    std::optional<std::uint64_t> seed;
};

// integral over the body of phi(f(x)). The body is split into cells on which
// a single affine piece of f is active, so every cell integrand is smooth.
double integrate_phi_f(const ConvexBody& body, const ConcaveFunction& f, const ConvexGauge& phi);

// Full pipeline: center -> reduced bound -> direct integral -> slack/status.
VerificationRecord check_inequality(const ConvexBody& body, const ConcaveFunction& f,
                                    const ConvexGauge& phi, std::string instance_id = "",
                                    std::optional<std::uint64_t> seed = std::nullopt);

struct RandomParams {
    int min_points = 8, max_points = 24;
    int min_pieces = 1, max_pieces = 6;
};

// Deterministic random (body, function) pair; f >= 0 on the body with its
// vertex minimum at exactly zero in half the instances.
std::pair<ConvexBody, ConcaveFunction> random_instance(std::uint64_t seed, int dim,
                                                       const RandomParams& params = {});

// Upper bound for |K| through the shadow on a coordinate plane and the fiber
// length at the shadow's center point. plane: 0 = xy, 1 = xz, 2 = yz.
VerificationRecord section_bound_check(const Polytope3& body, int plane);

struct ReproRow {
    std::string name;
    double stated = 0.0;    // constant as printed in the source theorem
    double computed = 0.0;  // optimizer / cross-evaluation value
    double argmax_m = 0.0;
    bool flagged = false;   // stated and computed disagree beyond 1e-6 relative
    std::string note;
};

std::vector<ReproRow> repro_table();

}  // namespace hhc

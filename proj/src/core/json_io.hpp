#pragma once

#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "center.hpp"
#include "functions.hpp"
#include "geometry.hpp"
#include "verify.hpp"

namespace hhc {

// Schema: {"type":"polygon2","vertices":[[x,y],...]}
//       | {"type":"polytope3","vertices":[[x,y,z],...]}
//       | {"type":"profile","dim":n,"t0":..,"t1":..,"knots":[[t,v],...]}
ConvexBody body_from_json(const nlohmann::json& j);
ConvexBody body_from_json_text(const std::string& text);
nlohmann::json body_to_json(const ConvexBody& body);

// Schema: {"type":"affine","gradient":[...],"offset":r}
//       | {"type":"min-affine","pieces":[{"gradient":..,"offset":..},...]}
ConcaveFunction function_from_json(const nlohmann::json& j);
ConcaveFunction function_from_json_text(const std::string& text);
nlohmann::json function_to_json(const ConcaveFunction& f);

// Schema: {"type":"power","alpha":a} | {"type":"exp"} | {"type":"exp-square"}
//       | {"type":"pwl-convex","knots":[[t,y],...]}
ConvexGauge gauge_from_json(const nlohmann::json& j);
ConvexGauge gauge_from_json_text(const std::string& text);
nlohmann::json gauge_to_json(const ConvexGauge& g);

nlohmann::json cone_to_json(const TruncatedCone& cone);
nlohmann::json center_to_json(const CenterResult& res);
nlohmann::json bound_report_to_json(const BoundReport& rep);
nlohmann::json record_to_json(const VerificationRecord& rec);
nlohmann::json repro_to_json(const std::vector<ReproRow>& rows);

}  // namespace hhc

#pragma once

// JSON forms of the domain objects: field and curve specs, points, matrix
// generators, ramification profiles, and the pair report. Element
// coefficients ride as base-p digit strings "a0,a1,..." (constant term
// first); points accept "x:y:z" with one digit string per coordinate.

#include <json.hpp>

#include "gptk/elliptic.hpp"
#include "gptk/galois.hpp"
#include "gptk/plane_curve.hpp"

namespace gptk {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldCtx* f);
const FieldCtx* field_from_json(const Json& j);

Json curve_to_json(const CurvePoly& c);
CurvePoly curve_from_json(const Json& j);

// curve spec plus "origin": [x,y,z]
Json elliptic_to_json(const EllipticModel& e);
EllipticModel elliptic_from_json(const Json& j);

Json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j, const FieldCtx* f);
ProjPoint point_from_string(const std::string& s, const FieldCtx* f);

Json collineation_to_json(const Collineation& t);
Collineation collineation_from_json(const Json& j, const FieldCtx* f);

Json profile_to_json(const RamificationProfile& p);
RamificationProfile profile_from_json(const Json& j);

Json perm_to_json(const Perm& p);
Perm perm_from_json(const Json& j);

Json pair_report_to_json(const PairReport& r);

// enough of a pair report to re-run the classifier
struct ReportCore {
    GroupFacts facts;
    std::vector<Perm> omega_perms;
    std::string stored_label;
};
ReportCore report_core_from_json(const Json& j);

Json load_json_file(const std::string& path);

} // namespace gptk

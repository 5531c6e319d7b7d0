#pragma once

#include <string>

#include <json.hpp>

#include "dilates/bounds.hpp"
#include "dilates/constructions.hpp"
#include "dilates/lattice.hpp"
#include "dilates/pointset.hpp"
#include "dilates/search.hpp"

namespace dilates {

// Reports use ordered JSON and a fixed field layout so equal runs render to
// identical bytes. Nothing time- or host-dependent goes in.
using Json = nlohmann::ordered_json;

Json json_point(const Point& p);
Json json_points(const PointSet& a);
Json json_matrix(const IntMatrix& m);

// Parses what json_points produced; exact round trip.
PointSet point_set_from_json(const Json& j);

Json json_bound_report(const BoundReport& rep);
Json json_reduction(const ReductionRecord& rec);
Json json_dichotomy(const DichotomyVerdict& v);
Json json_construction(const ConstructionCheck& c);
Json json_extremal(const ExtremalRecord& rec);

// Envelope: schema version, tool identity, command, input digest (empty for
// commands without point-file input), parameters, results.
Json make_report(const std::string& command, const std::string& input_digest,
                 Json parameters, Json results);

std::string render_report(const Json& doc);

// Witness payload for theorem-violation errors.
std::string witness_json(const PointSet& a, Json extra);

}  // namespace dilates

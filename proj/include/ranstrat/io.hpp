#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ranstrat/cech.hpp"
#include "ranstrat/complexes.hpp"
#include "ranstrat/geometry.hpp"
#include "ranstrat/paths.hpp"
#include "ranstrat/scposet.hpp"
#include "ranstrat/strat.hpp"

namespace ranstrat::io {

using Json = nlohmann::json;

// Every reader throws ValidationError on malformed input, with the offending
// field in the message.

Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const PointConfig& p);
PointConfig points_from_json(const Json& j);

/// Point configuration with an extra "radius" field.
Json to_json(const RanPoint& x);
RanPoint ran_point_from_json(const Json& j);

Json to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j);

Json to_json(const Filtration& f);
Filtration filtration_from_json(const Json& j);

Json to_json(const PosetUniverse& u);
PosetUniverse universe_from_json(const Json& j);

/// The safe-ball fields are added when `ball` is given.
Json to_json(const StratumLabel& l, const std::optional<SafeBall>& ball = std::nullopt);
StratumLabel label_from_json(const Json& j);

Json to_json(const PLPath& p);
PLPath path_from_json(const Json& j);

Json to_json(const ZigzagDiagram& z);
ZigzagDiagram zigzag_from_json(const Json& j);

Json to_json(const FiltrationChain& f);

Json to_json(const FrontierReport& r);

Json to_json(const HasseDiagram& h);

Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ranstrat::io

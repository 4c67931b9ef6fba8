#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "etau/foliation.hpp"
#include "etau/isometry.hpp"
#include "etau/slab.hpp"
#include "etau/solver.hpp"

namespace etau {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json to_json(const AmbientPoint& p);
json to_json(const AmbientIsometry& iso);
/// Rebuilds an isometry from {family, params}; throws ParameterError for unknown families.
AmbientIsometry isometry_from_json(const json& j, const SpaceParams& sp);

json to_json(const BoundingReport& r);
json to_json(const AnnulusCheck& c);
json to_json(const SlabReport& r);
json to_json(const Example1Info& info);
json to_json(const Example2Feasibility& f);
json to_json(const AreaReport& a);
/// Convergence report without the solution grid.
json to_json(const SolveReport& r);
json to_json(const LeafFindResult& r);

/// Header object for a graph grid: model, chart, bounds, sizes.
json grid_header(const GraphDomain& dom);

/// First line: the JSON header; then "i,j,x,y,u" rows for mask nodes.
void write_graph_csv(std::ostream& os, const GraphFunction& u);
/// Inverse of write_graph_csv; nodes absent from the file are outside the mask.
GraphFunction read_graph_csv(std::istream& is);

}  // namespace etau

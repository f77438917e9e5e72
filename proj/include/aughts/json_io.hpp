#pragma once

// JSON records for the CLI. Every top-level object carries "schema_version".

#include <json.hpp>
#include <string>

#include "aughts/group_atlas.hpp"
#include "aughts/orbit.hpp"
#include "aughts/statistics.hpp"

namespace aughts {

inline constexpr int kSchemaVersion = 1;

/// A ratio rounded to 12 significant digits.
double round12(double v);
std::string format12(double v);

nlohmann::json point_json(const LatticePoint& x);
nlohmann::json point_json(const Point2& x);

nlohmann::json orbit_json(const Orbit2D& o);
nlohmann::json trajectory_json(const Trajectory& t);
/// Node and edge counts plus the node list when it has at most max_listed entries.
nlohmann::json reach_json(const LatticePoint& start, const ReachGraph& g, std::size_t max_listed = 64);
nlohmann::json catalog_json(const GroupCatalog& cat);
nlohmann::json region_json(const Region& r);
nlohmann::json census_json(const CensusReport& r);

}  // namespace aughts

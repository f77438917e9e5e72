#include "aughts/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace aughts {

using nlohmann::json;

std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(format12(v).c_str(), nullptr); }

json point_json(const LatticePoint& x) {
  json a = json::array();
  for (Index k = 0; k < x.size(); ++k) a.push_back(x(k));
  return a;
}

json point_json(const Point2& x) { return json::array({x(0), x(1)}); }

json orbit_json(const Orbit2D& o) {
  json nodes = json::array();
  json flags = json::array();
  for (const Point2& p : o.nodes()) {
    nodes.push_back(point_json(p));
    flags.push_back(is_diametral(o, p));
  }
  json cycle = json::array();
  for (const Point2& p : o.cycle()) cycle.push_back(point_json(p));
  return {{"schema_version", kSchemaVersion},
          {"kind", "orbit2d"},
          {"seed", point_json(o.seed())},
          {"cycle", cycle},
          {"nodes", nodes},
          {"diametral", flags},
          {"size", o.size()},
          {"semi_perimeter", o.semi_perimeter()},
          {"perimeter", o.perimeter()},
          {"box_side", o.box_side()},
          {"diam_multiplier", o.diam_multiplier()},
          {"canonical_rep", point_json(canonical_rep(o))}};
}

json trajectory_json(const Trajectory& t) {
  json path = json::array();
  for (const auto& p : t.path) path.push_back(point_json(p));
  return {{"schema_version", kSchemaVersion},
          {"kind", "trajectory"},
          {"start", point_json(t.start)},
          {"word", t.word},
          {"path", path},
          {"steps", t.word.size()},
          {"closed", t.closed},
          {"distinct_nodes", t.distinct_interior()}};
}

json reach_json(const LatticePoint& start, const ReachGraph& g, std::size_t max_listed) {
  json out = {{"schema_version", kSchemaVersion},
              {"kind", "reach_graph"},
              {"start", point_json(start)},
              {"nodes", g.nodes.size()},
              {"edges", g.edges.size()}};
  if (g.nodes.size() <= max_listed) {
    json list = json::array();
    for (const auto& p : g.nodes) list.push_back(point_json(p));
    out["node_list"] = list;
  }
  return out;
}

json catalog_json(const GroupCatalog& cat) {
  json elems = json::array();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    elems.push_back({{"element", to_text(cat.elements[i])},
                     {"distance", cat.distance[i]},
                     {"word", cat.word(i)},
                     {"psi", cycle_string(cat.psi_images[i])},
                     {"order", element_order(cat.elements[i])}});
  }
  json spectrum = json::object();
  for (auto [ord, cnt] : order_spectrum(cat)) spectrum[std::to_string(ord)] = cnt;
  return {{"schema_version", kSchemaVersion},
          {"kind", "group_catalog"},
          {"n", cat.n},
          {"size", cat.size()},
          {"max_distance", cat.max_distance()},
          {"distance_histogram", cat.distance_histogram()},
          {"order_spectrum", spectrum},
          {"elements", elems}};
}

json region_json(const Region& r) { return {{"kind", to_string(r.kind)}, {"params", r.params}}; }

json census_json(const CensusReport& r) {
  json residues = json::object();
  json residue_ratios = json::object();
  for (auto [res, cnt] : r.residue_counts) {
    residues[std::to_string(res)] = cnt;
    if (r.region.kind == RegionKind::square_0M) {
      const double m = static_cast<double>(r.region.params[0]);
      residue_ratios[std::to_string(res)] = round12(static_cast<double>(cnt) / (m * m));
    }
  }
  json out = {{"schema_version", kSchemaVersion},
              {"kind", "census"},
              {"region", region_json(r.region)},
              {"modulus", r.modulus ? json(*r.modulus) : json(nullptr)},
              {"counts",
               {{"total_points", r.total_points},
                {"diametral_points", r.diametral_points},
                {"total_orbits", r.total_orbits},
                {"residues", residues}}},
              {"sums",
               {{"point_length", r.point_length_sum},
                {"orbit_diam_multiplier", r.orbit_diam_sum},
                {"orbit_box_side", r.orbit_box_sum},
                {"orbit_perimeter", r.orbit_perimeter_sum}}},
              {"max_length", {{"value", r.max_length}, {"point", point_json(r.max_length_point)}}},
              {"ratios",
               {{"diametral_fraction", round12(r.diametral_fraction())},
                {"mean_point_length", round12(r.mean_point_length())},
                {"mean_orbit_diameter", round12(r.mean_orbit_diameter())},
                {"mean_orbit_box_side", round12(r.mean_orbit_box_side())},
                {"mean_orbit_perimeter", round12(r.mean_orbit_perimeter())}}}};
  if (!residue_ratios.empty()) out["ratios"]["residues_per_M2"] = residue_ratios;
  return out;
}

}  // namespace aughts

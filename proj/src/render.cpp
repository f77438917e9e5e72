#include "aughts/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

namespace aughts {

RenderMode parse_render_mode(const std::string& s) {
  if (s == "mod_color" || s == "mod-color") return RenderMode::mod_color;
  if (s == "diametral") return RenderMode::diametral;
  if (s == "projection") return RenderMode::projection;
  if (s == "single_orbit" || s == "single-orbit") return RenderMode::single_orbit;
  throw ArgumentError("unknown render mode '" + s + "'");
}

std::string to_string(RenderMode m) {
  switch (m) {
    case RenderMode::mod_color: return "mod_color";
    case RenderMode::diametral: return "diametral";
    case RenderMode::projection: return "projection";
    case RenderMode::single_orbit: return "single_orbit";
  }
  return "unknown";
}

const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> palette{
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
      "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39",
      "#7b4173", "#3182bd", "#e6550d", "#31a354", "#756bb1"};
  return palette;
}

std::vector<std::string> parse_palette(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const bool ok = item.size() == 7 && item[0] == '#' &&
                    std::all_of(item.begin() + 1, item.end(), [](unsigned char c) { return std::isxdigit(c); });
    if (!ok) throw ArgumentError("palette entry '" + item + "' is not of the form #rrggbb");
    out.push_back(item);
  }
  if (out.empty()) throw ArgumentError("palette is empty");
  return out;
}

std::vector<std::int64_t> used_residues(const Region& region, std::int64_t modulus) {
  std::set<std::int64_t> used;
  for (std::int64_t x = region.x_min(); x <= region.x_max(); ++x) {
    auto [lo, hi] = region.y_range(x);
    for (std::int64_t y = lo; y <= hi; ++y) used.insert(2 * semi_perimeter(Point2(x, y)) % modulus);
  }
  return {used.begin(), used.end()};
}

std::string residue_color(const std::vector<std::string>& palette, const std::vector<std::int64_t>& used,
                          std::int64_t modulus, std::int64_t residue) {
  if (static_cast<std::int64_t>(palette.size()) >= modulus) return palette[static_cast<std::size_t>(residue)];
  auto it = std::lower_bound(used.begin(), used.end(), residue);
  if (it == used.end() || *it != residue) throw ArgumentError("residue is not among the used residues");
  return palette[static_cast<std::size_t>(it - used.begin())];
}

namespace {

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string header(long width, long height) {
  return fmt("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%ld\" height=\"%ld\" viewBox=\"0 0 %ld %ld\">\n",
             width, height, width, height) +
         fmt("<rect x=\"0\" y=\"0\" width=\"%ld\" height=\"%ld\" fill=\"#ffffff\"/>\n", width, height);
}

struct Frame {
  std::int64_t x0, x1, y0, y1;
  int scale;
  long width() const { return static_cast<long>((x1 - x0 + 1) * scale); }
  long height() const { return static_cast<long>((y1 - y0 + 1) * scale); }
  long px(std::int64_t x) const { return static_cast<long>((x - x0) * scale); }
  long py(std::int64_t y) const { return static_cast<long>((y1 - y) * scale); }
};

Frame region_frame(const Region& r, int scale) {
  Frame f{r.x_min(), r.x_max(), 0, 0, scale};
  bool any = false;
  for (std::int64_t x = r.x_min(); x <= r.x_max(); ++x) {
    auto [lo, hi] = r.y_range(x);
    if (lo > hi) continue;
    f.y0 = any ? std::min(f.y0, lo) : lo;
    f.y1 = any ? std::max(f.y1, hi) : hi;
    any = true;
  }
  return f;
}

/// Lattice points of the region grouped by a class key, in scan order inside each group.
template <typename Classify>
std::map<std::int64_t, std::vector<Point2>> classify_points(const Region& r, Classify classify) {
  std::map<std::int64_t, std::vector<Point2>> groups;
  for (std::int64_t x = r.x_min(); x <= r.x_max(); ++x) {
    auto [lo, hi] = r.y_range(x);
    for (std::int64_t y = lo; y <= hi; ++y) groups[classify(Point2(x, y))].emplace_back(x, y);
  }
  return groups;
}

void emit_cells(std::string& out, const Frame& f, const std::vector<Point2>& pts) {
  for (const Point2& p : pts)
    out += fmt("<rect x=\"%ld\" y=\"%ld\" width=\"%d\" height=\"%d\"/>\n", f.px(p(0)), f.py(p(1)), f.scale, f.scale);
}

std::string render_mod_color(const RenderSpec& spec) {
  if (!spec.modulus || *spec.modulus < 2) throw ArgumentError("mod_color rendering needs a modulus d >= 2");
  const std::int64_t d = *spec.modulus;
  const auto used = used_residues(spec.region, d);
  if (spec.palette.size() < used.size())
    throw ArgumentError("palette has " + std::to_string(spec.palette.size()) + " colours but " +
                        std::to_string(used.size()) + " residues are used");
  const Frame f = region_frame(spec.region, spec.scale);
  auto groups = classify_points(spec.region, [&](const Point2& p) { return 2 * semi_perimeter(p) % d; });
  std::string out = header(f.width(), f.height());
  for (const auto& [res, pts] : groups) {
    out += fmt("<g class=\"residue\" data-residue=\"%lld\" fill=\"%s\">\n", static_cast<long long>(res),
               residue_color(spec.palette, used, d, res).c_str());
    emit_cells(out, f, pts);
    out += "</g>\n";
  }
  return out + "</svg>\n";
}

std::string render_diametral(const RenderSpec& spec) {
  const Frame f = region_frame(spec.region, spec.scale);
  auto groups = classify_points(spec.region, [](const Point2& p) -> std::int64_t { return is_diametral(p) ? 1 : 0; });
  std::string out = header(f.width(), f.height());
  for (std::int64_t key : {1, 0}) {
    auto it = groups.find(key);
    if (it == groups.end()) continue;
    out += fmt("<g class=\"%s\" fill=\"%s\">\n", key ? "diametral" : "other", key ? kDiametralColor : kOtherColor);
    emit_cells(out, f, it->second);
    out += "</g>\n";
  }
  return out + "</svg>\n";
}

std::string render_projection(const RenderSpec& spec) {
  // Directions reduced to primitive vectors; the diametral flag is scale invariant.
  std::set<std::pair<std::int64_t, std::int64_t>> red, blue;
  for (std::int64_t x = spec.region.x_min(); x <= spec.region.x_max(); ++x) {
    auto [lo, hi] = spec.region.y_range(x);
    for (std::int64_t y = lo; y <= hi; ++y) {
      const Orbit2D o(Point2(x, y), spec.order);
      for (const Point2& p : o.nodes()) {
        if (p.isZero()) continue;
        const std::int64_t g = std::gcd(p(0), p(1));
        (is_diametral(o, p) ? red : blue).emplace(p(0) / g, p(1) / g);
      }
    }
  }
  const double radius = 40.0 * spec.scale;
  const long size = static_cast<long>(2 * radius + 4 * spec.scale);
  const double c = size / 2.0;
  std::string out = header(size, size);
  out += fmt("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" stroke=\"#cccccc\"/>\n", c, c, radius);
  auto dots = [&](const auto& dirs, const char* cls, const char* color) {
    out += fmt("<g class=\"%s\" fill=\"%s\">\n", cls, color);
    for (auto [dx, dy] : dirs) {
      const double a = std::atan2(static_cast<double>(dy), static_cast<double>(dx));
      out += fmt("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"2\"/>\n", c + radius * std::cos(a), c - radius * std::sin(a));
    }
    out += "</g>\n";
  };
  dots(blue, "other", kOtherColor);
  dots(red, "diametral", kDiametralColor);
  return out + "</svg>\n";
}

std::string render_single_orbit(const RenderSpec& spec) {
  const Orbit2D o(spec.seed, spec.order);
  const auto cyc = o.cycle();
  Frame f{cyc[0](0), cyc[0](0), cyc[0](1), cyc[0](1), spec.scale};
  for (const Point2& p : cyc) {
    f.x0 = std::min(f.x0, p(0) - 1);
    f.x1 = std::max(f.x1, p(0) + 1);
    f.y0 = std::min(f.y0, p(1) - 1);
    f.y1 = std::max(f.y1, p(1) + 1);
  }
  if (static_cast<std::uint64_t>(f.x1 - f.x0 + 1) * static_cast<std::uint64_t>(f.y1 - f.y0 + 1) > spec.max_points)
    throw ResourceError("orbit picture exceeds the render budget");
  const long half = spec.scale / 2;
  std::string out = header(f.width(), f.height());
  out += "<polyline class=\"orbit\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k <= cyc.size(); ++k) {
    const Point2& p = cyc[k % cyc.size()];
    out += fmt("%s%ld,%ld", k ? " " : "", f.px(p(0)) + half, f.py(p(1)) + half);
  }
  out += "\"/>\n";
  for (const Point2& p : o.nodes())
    out += fmt("<circle cx=\"%ld\" cy=\"%ld\" r=\"%d\" fill=\"%s\"/>\n", f.px(p(0)) + half, f.py(p(1)) + half,
               std::max(2, spec.scale / 3), is_diametral(o, p) ? kDiametralColor : kOtherColor);
  return out + "</svg>\n";
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  if (spec.scale < 1 || spec.scale > 256) throw ArgumentError("scale must be between 1 and 256 pixels");
  if (spec.palette.empty()) throw ArgumentError("palette is empty");
  if (spec.mode != RenderMode::single_orbit && spec.region.point_count() > spec.max_points)
    throw ResourceError("region has " + std::to_string(spec.region.point_count()) +
                        " points, above the render budget of " + std::to_string(spec.max_points));
  switch (spec.mode) {
    case RenderMode::mod_color: return render_mod_color(spec);
    case RenderMode::diametral: return render_diametral(spec);
    case RenderMode::projection: return render_projection(spec);
    case RenderMode::single_orbit: return render_single_orbit(spec);
  }
  throw ArgumentError("unknown render mode");
}

}  // namespace aughts

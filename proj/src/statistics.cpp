#include "aughts/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace aughts {

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::square_0M: return "square_0M";
    case RegionKind::square_sym: return "square_sym";
    case RegionKind::hexagon_H: return "hexagon_H";
    case RegionKind::disk: return "disk";
    case RegionKind::rect: return "rect";
  }
  return "unknown";
}

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw ArgumentError(std::string(what) + " must be positive, got " + std::to_string(v));
  if (v > kCoordinateBound / 4) throw ArgumentError(std::string(what) + " is too large");
}

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

Region Region::square(std::int64_t M) {
  require_positive(M, "square size M");
  return {RegionKind::square_0M, {M}};
}

Region Region::sym_square(std::int64_t R) {
  require_positive(R, "symmetric square size R");
  return {RegionKind::square_sym, {R}};
}

Region Region::hexagon(std::int64_t M) {
  require_positive(M, "hexagon size M");
  return {RegionKind::hexagon_H, {M}};
}

Region Region::disk(std::int64_t R) {
  require_positive(R, "disk radius R");
  return {RegionKind::disk, {R}};
}

Region Region::rect(std::int64_t x0, std::int64_t x1, std::int64_t y0, std::int64_t y1) {
  if (x0 > x1 || y0 > y1) throw ArgumentError("rectangle bounds must satisfy x0 <= x1 and y0 <= y1");
  for (auto v : {x0, x1, y0, y1})
    if (std::abs(v) > kCoordinateBound / 4) throw ArgumentError("rectangle bound is too large");
  return {RegionKind::rect, {x0, x1, y0, y1}};
}

bool Region::contains(const Point2& p) const {
  const std::int64_t x = p(0), y = p(1);
  switch (kind) {
    case RegionKind::square_0M: return 0 <= x && x <= params[0] && 0 <= y && y <= params[0];
    case RegionKind::square_sym: return std::abs(x) <= params[0] && std::abs(y) <= params[0];
    case RegionKind::hexagon_H:
      return std::abs(x) <= params[0] && std::abs(y) <= params[0] && std::abs(x - y) <= params[0];
    case RegionKind::disk: return x * x + y * y <= params[0] * params[0];
    case RegionKind::rect: return params[0] <= x && x <= params[1] && params[2] <= y && y <= params[3];
  }
  return false;
}

std::int64_t Region::x_min() const {
  switch (kind) {
    case RegionKind::square_0M: return 0;
    case RegionKind::rect: return params[0];
    default: return -params[0];
  }
}

std::int64_t Region::x_max() const { return kind == RegionKind::rect ? params[1] : params[0]; }

std::pair<std::int64_t, std::int64_t> Region::y_range(std::int64_t x) const {
  if (x < x_min() || x > x_max()) return {1, 0};
  switch (kind) {
    case RegionKind::square_0M: return {0, params[0]};
    case RegionKind::square_sym: return {-params[0], params[0]};
    case RegionKind::hexagon_H: {
      const std::int64_t M = params[0];
      return {std::max(-M, x - M), std::min(M, x + M)};
    }
    case RegionKind::disk: {
      const std::int64_t h = isqrt(params[0] * params[0] - x * x);
      return {-h, h};
    }
    case RegionKind::rect: return {params[2], params[3]};
  }
  return {1, 0};
}

std::uint64_t Region::point_count() const {
  std::uint64_t total = 0;
  for (std::int64_t x = x_min(); x <= x_max(); ++x) {
    auto [lo, hi] = y_range(x);
    if (lo <= hi) total += static_cast<std::uint64_t>(hi - lo + 1);
  }
  return total;
}

double CensusReport::diametral_fraction() const {
  return total_points ? static_cast<double>(diametral_points) / static_cast<double>(total_points) : 0.0;
}

double CensusReport::mean_point_length() const {
  return total_points ? static_cast<double>(point_length_sum) / static_cast<double>(total_points) : 0.0;
}

double CensusReport::mean_orbit_diameter() const {
  return total_orbits ? std::numbers::sqrt2 * static_cast<double>(orbit_diam_sum) / static_cast<double>(total_orbits)
                      : 0.0;
}

double CensusReport::mean_orbit_box_side() const {
  return total_orbits ? static_cast<double>(orbit_box_sum) / static_cast<double>(total_orbits) : 0.0;
}

double CensusReport::mean_orbit_perimeter() const {
  return total_orbits ? static_cast<double>(orbit_perimeter_sum) / static_cast<double>(total_orbits) : 0.0;
}

void CensusReport::merge(const CensusReport& other) {
  total_points += other.total_points;
  diametral_points += other.diametral_points;
  point_length_sum = checked_add(point_length_sum, other.point_length_sum);
  if (other.max_length > max_length ||
      (other.max_length == max_length && other.total_points > 0 && LexLess{}(other.max_length_point, max_length_point))) {
    max_length = other.max_length;
    max_length_point = other.max_length_point;
  }
  total_orbits += other.total_orbits;
  for (auto [r, c] : other.residue_counts) residue_counts[r] += c;
  orbit_diam_sum = checked_add(orbit_diam_sum, other.orbit_diam_sum);
  orbit_box_sum = checked_add(orbit_box_sum, other.orbit_box_sum);
  orbit_perimeter_sum = checked_add(orbit_perimeter_sum, other.orbit_perimeter_sum);
}

namespace {

CensusReport empty_report(const Region& region, std::optional<std::int64_t> modulus) {
  CensusReport r;
  r.region = region;
  r.modulus = modulus;
  if (modulus)
    for (std::int64_t k = 0; k < *modulus; ++k) r.residue_counts[k] = 0;
  return r;
}

bool owns_orbit(const Region& region, const Orbit2D& o, const Point2& x) {
  LexLess less;
  for (const Point2& p : o.nodes())
    if (less(p, x) && region.contains(p)) return false;
  return true;
}

CensusReport scan_columns(const Region& region, std::optional<std::int64_t> modulus, std::int64_t x_lo,
                          std::int64_t x_hi) {
  CensusReport r = empty_report(region, modulus);
  bool have_max = false;
  for (std::int64_t x1 = x_lo; x1 <= x_hi; ++x1) {
    auto [lo, hi] = region.y_range(x1);
    for (std::int64_t x2 = lo; x2 <= hi; ++x2) {
      const Point2 x(x1, x2);
      const Orbit2D o(x);
      const std::int64_t len = o.perimeter();

      ++r.total_points;
      if (is_diametral(o, x)) ++r.diametral_points;
      r.point_length_sum += len;
      if (!have_max || len > r.max_length) {
        r.max_length = len;
        r.max_length_point = x;
        have_max = true;
      }

      if (!owns_orbit(region, o, x)) continue;
      ++r.total_orbits;
      if (modulus) ++r.residue_counts[len % *modulus];
      r.orbit_diam_sum += o.diam_multiplier();
      r.orbit_box_sum += o.box_side();
      r.orbit_perimeter_sum += len;
    }
  }
  return r;
}

}  // namespace

CensusReport census(const Region& region, const CensusOptions& options) {
  if (options.modulus && *options.modulus < 2) throw ArgumentError("modulus must be at least 2");
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t x0 = region.x_min();
  const std::int64_t x1 = region.x_max();
  const std::int64_t columns = x1 - x0 + 1;
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, columns));

  std::vector<CensusReport> partial(threads);
  {
    std::vector<std::jthread> workers;
    const std::int64_t chunk = (columns + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::int64_t lo = x0 + chunk * t;
      const std::int64_t hi = std::min(x1, lo + chunk - 1);
      workers.emplace_back([&, t, lo, hi] { partial[t] = scan_columns(region, options.modulus, lo, hi); });
    }
  }
  CensusReport total = empty_report(region, options.modulus);
  bool first = true;
  for (const auto& p : partial) {
    if (p.total_points == 0) continue;
    if (first) {
      total.max_length = p.max_length;
      total.max_length_point = p.max_length_point;
      first = false;
    }
    total.merge(p);
  }
  return total;
}

std::int64_t count_orbits_with_perimeter(std::int64_t X) {
  if (X < 1) throw ArgumentError("perimeter must be positive");
  if (X % 4 != 0) return 0;
  return X / 6 - (X + 11) / 12 + 1;
}

PerimeterStats cumulative_perimeter_stats(std::int64_t T) {
  if (T < 4) throw ArgumentError("cumulative statistics need T >= 4");
  PerimeterStats s;
  for (std::int64_t X = 4; X <= T; X += 4) {
    const std::int64_t n = count_orbits_with_perimeter(X);
    s.count = checked_add(s.count, n);
    s.sum = checked_add(s.sum, checked_mul(X, n));
  }
  s.average = s.count ? static_cast<double>(s.sum) / static_cast<double>(s.count) : 0.0;
  return s;
}

CensusReport modular_census(std::int64_t M, std::int64_t d, unsigned threads) {
  return census(Region::square(M), {d, threads});
}

double diametral_census(const Region& region, unsigned threads) {
  return census(region, {std::nullopt, threads}).diametral_fraction();
}

double average_diameter_square(std::int64_t M, unsigned threads) {
  return census(Region::square(M), {std::nullopt, threads}).mean_orbit_diameter();
}

double average_length_disk(std::int64_t R, unsigned threads) {
  return census(Region::disk(R), {std::nullopt, threads}).mean_point_length();
}

std::size_t ProjectionHistogram::bin_of(const Point2& p) const {
  const std::size_t bins = diametral.size();
  double angle = std::atan2(static_cast<double>(p(1)), static_cast<double>(p(0)));
  if (angle < 0) angle += 2 * std::numbers::pi;
  auto k = static_cast<std::size_t>(angle / (2 * std::numbers::pi) * static_cast<double>(bins));
  return std::min(k, bins - 1);
}

ProjectionHistogram projection_histogram(const Region& region, std::size_t bins) {
  if (bins < 8) throw ArgumentError("projection histogram needs at least 8 bins");
  ProjectionHistogram h;
  h.diametral.assign(bins, 0);
  h.other.assign(bins, 0);
  for (std::int64_t x1 = region.x_min(); x1 <= region.x_max(); ++x1) {
    auto [lo, hi] = region.y_range(x1);
    for (std::int64_t x2 = lo; x2 <= hi; ++x2) {
      const Point2 x(x1, x2);
      if (x1 == 0 && x2 == 0) continue;
      (is_diametral(x) ? h.diametral : h.other)[h.bin_of(x)] += 1;
    }
  }
  return h;
}

}  // namespace aughts

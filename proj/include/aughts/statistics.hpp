#pragma once

// Counting formulas and lattice censuses for the plane orbits.
//
// Two kinds of tallies appear below and are never mixed:
//   * point tallies run over every lattice point of a region
//     (diametral fraction, point-averaged orbit length);
//   * orbit tallies count each orbit meeting the region exactly once
//     (residue counts, orbit-averaged diameter, box side and perimeter).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aughts/orbit.hpp"

namespace aughts {

enum class RegionKind { square_0M, square_sym, hexagon_H, disk, rect };

std::string to_string(RegionKind kind);

struct Region {
  RegionKind kind = RegionKind::square_0M;
  /// square_0M / hexagon_H: {M}; square_sym / disk: {R}; rect: {x0, x1, y0, y1}.
  std::vector<std::int64_t> params;

  static Region square(std::int64_t M);       // [0,M]^2
  static Region sym_square(std::int64_t R);   // [-R,R]^2
  static Region hexagon(std::int64_t M);      // ABCDEF: |x|,|y|,|x-y| <= M
  static Region disk(std::int64_t R);         // x^2 + y^2 <= R^2
  static Region rect(std::int64_t x0, std::int64_t x1, std::int64_t y0, std::int64_t y1);

  bool operator==(const Region&) const = default;

  bool contains(const Point2& p) const;
  std::int64_t x_min() const;
  std::int64_t x_max() const;
  /// Inclusive y-range of the region on the column x; empty when lo > hi.
  std::pair<std::int64_t, std::int64_t> y_range(std::int64_t x) const;
  /// Number of lattice points, counted exactly.
  std::uint64_t point_count() const;
};

struct CensusOptions {
  std::optional<std::int64_t> modulus;
  unsigned threads = 0;  // 0: use the hardware concurrency
};

struct CensusReport {
  Region region;
  std::optional<std::int64_t> modulus;

  // Point tallies.
  std::uint64_t total_points = 0;
  std::uint64_t diametral_points = 0;
  std::int64_t point_length_sum = 0;  // sum of 2p(x) over points
  std::int64_t max_length = 0;        // largest 2p(x) over points
  Point2 max_length_point = Point2::Zero();

  // Orbit tallies.
  std::uint64_t total_orbits = 0;
  std::map<std::int64_t, std::uint64_t> residue_counts;  // orbit length mod d -> orbits
  std::int64_t orbit_diam_sum = 0;       // sum of diameter multipliers m
  std::int64_t orbit_box_sum = 0;        // sum of box sides L
  std::int64_t orbit_perimeter_sum = 0;  // sum of lengths 2p

  double diametral_fraction() const;
  double mean_point_length() const;
  double mean_orbit_diameter() const;  // includes the sqrt(2) factor
  double mean_orbit_box_side() const;
  double mean_orbit_perimeter() const;

  /// Commutative merge of a partial report over a disjoint part of the region.
  void merge(const CensusReport& other);
  bool operator==(const CensusReport&) const = default;
};

/// One streaming pass over the region. An orbit is attributed to the
/// lexicographically smallest of its nodes that lies in the region, so the
/// orbit count needs no memory beyond a single row.
CensusReport census(const Region& region, const CensusOptions& options = {});

/// Orbits of length X in the whole plane: 0 unless 4 | X, else floor(X/6) - ceil(X/12) + 1.
std::int64_t count_orbits_with_perimeter(std::int64_t X);

struct PerimeterStats {
  std::int64_t count = 0;  // orbits with 0 < length <= T
  std::int64_t sum = 0;    // total length of those orbits
  double average = 0.0;
};

PerimeterStats cumulative_perimeter_stats(std::int64_t T);

/// Orbits seeded in [0,M]^2 tallied by length mod d.
CensusReport modular_census(std::int64_t M, std::int64_t d, unsigned threads = 0);
/// Fraction of the region's points that lie on the diameter of their orbit.
double diametral_census(const Region& region, unsigned threads = 0);
/// Mean Euclidean diameter over the distinct orbits with a node in [0,M]^2.
double average_diameter_square(std::int64_t M, unsigned threads = 0);
/// Mean orbit length over all lattice points of the disk of radius R.
double average_length_disk(std::int64_t R, unsigned threads = 0);

struct ProjectionHistogram {
  std::vector<std::uint64_t> diametral;
  std::vector<std::uint64_t> other;
  /// Bin k covers directions [2 pi k / bins, 2 pi (k+1) / bins).
  std::size_t bin_of(const Point2& p) const;
};

/// Directions of the region's non-zero points, split by the diametral flag.
ProjectionHistogram projection_histogram(const Region& region, std::size_t bins);

}  // namespace aughts

#pragma once

// The operators x -> K_j x on Z^n, word evaluation, reachable graphs, and the
// closed two-dimensional orbits ("twisted aughts") with their metrics.

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "aughts/involution.hpp"

namespace aughts {

using LatticePoint = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using Point2 = Eigen::Matrix<std::int64_t, 2, 1>;

/// Lexicographic order on coordinates; gives lattice points a set/map key.
struct LexLess {
  template <typename A, typename B>
  bool operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    const Index n = std::min(a.size(), b.size());
    for (Index k = 0; k < n; ++k)
      if (a(k) != b(k)) return a(k) < b(k);
    return a.size() < b.size();
  }
};

LatticePoint make_point(std::initializer_list<std::int64_t> coords);
LatticePoint make_point(std::span<const std::int64_t> coords);

/// Coordinate j replaced by the alternating sum r_j . x; checked arithmetic.
template <typename Derived>
typename Derived::PlainObject apply_k(const Eigen::MatrixBase<Derived>& x, Index j) {
  const Index n = x.size();
  detail::require_index(n, j);
  std::int64_t acc = 0;
  for (Index k = 0; k < n; ++k) acc = checked_add(acc, checked_mul(sign_pow<std::int64_t>(j + k), std::int64_t(x(k))));
  typename Derived::PlainObject y = x;
  y(j - 1) = acc;
  return y;
}

enum class SeedOrder { k1_first, k2_first };

/// Alternating word [1,2,1,2,1,2] (or starting with 2) that closes every 2D orbit.
std::vector<Index> aught_word(SeedOrder order = SeedOrder::k1_first);

struct Trajectory {
  LatticePoint start;
  std::vector<Index> word;
  std::vector<LatticePoint> path;
  bool closed = false;

  /// Number of distinct points among path[0 .. path.size()-2] (the closing point excluded).
  std::size_t distinct_interior() const;
};

Trajectory run_word(const LatticePoint& x, std::span<const Index> word);

struct PairLexLess {
  bool operator()(const std::pair<LatticePoint, LatticePoint>& a,
                  const std::pair<LatticePoint, LatticePoint>& b) const {
    LexLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

/// Points reachable from a start under every K_j, joined by single-operator
/// moves between distinct points. Edges are stored with first < second.
struct ReachGraph {
  std::set<LatticePoint, LexLess> nodes;
  std::set<std::pair<LatticePoint, LatticePoint>, PairLexLess> edges;
};

inline constexpr std::size_t kReachGuard = 1'000'000;
inline constexpr Index kMaxReachDimension = 6;

ReachGraph reach_graph(const LatticePoint& x, std::size_t guard = kReachGuard);
/// Minimal number of operator applications taking a to b; empty if b is not reachable.
std::optional<std::size_t> orbit_distance(const LatticePoint& a, const LatticePoint& b,
                                          std::size_t guard = kReachGuard);

/// Inputs to the 2D routines must satisfy |x_i| <= 2^31 so every derived quantity fits.
inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 31;

/// The closed orbit of a plane point.
///
/// cycle() holds P_1..P_6 exactly as produced by alternating K_1, K_2 from the
/// seed (K_2 first when seeded that way); nodes() is that cycle with repeated
/// points dropped, so it has 1, 3 or 6 entries.
class Orbit2D {
 public:
  Orbit2D() = default;
  Orbit2D(const Point2& seed, SeedOrder order = SeedOrder::k1_first);

  const Point2& seed() const { return cycle_[0]; }
  std::span<const Point2> cycle() const { return cycle_; }
  std::span<const Point2> nodes() const { return {nodes_.data(), count_}; }
  std::size_t size() const { return count_; }

  std::int64_t semi_perimeter() const { return semi_perimeter_; }
  std::int64_t perimeter() const { return 2 * semi_perimeter_; }
  std::int64_t box_side() const { return box_side_; }
  /// m such that the Euclidean diameter is sqrt(2) * m.
  std::int64_t diam_multiplier() const { return diam_multiplier_; }

 private:
  std::array<Point2, 6> cycle_{};
  std::array<Point2, 6> nodes_{};
  std::size_t count_ = 0;
  std::int64_t semi_perimeter_ = 0;
  std::int64_t box_side_ = 0;
  std::int64_t diam_multiplier_ = 0;
};

Orbit2D orbit2d(const Point2& x, SeedOrder order = SeedOrder::k1_first);
Orbit2D orbit2d(const LatticePoint& x, SeedOrder order = SeedOrder::k1_first);

/// |2x1 - x2| + |x1 + x2| + |2x2 - x1|; the orbit length is twice this.
std::int64_t semi_perimeter(const Point2& x);
std::int64_t semi_perimeter(const LatticePoint& x);
/// max{|x1 + x2|, |x1 - 2x2|, |x2 - 2x1|}, the side of the square bounding box.
std::int64_t box_side(const Point2& x);

inline std::int64_t dist2(const Point2& a, const Point2& b) { return (a - b).squaredNorm(); }

struct Diameter {
  std::int64_t multiplier = 0;  // diameter = sqrt(2) * multiplier
  std::vector<std::pair<Point2, Point2>> pairs;
};

/// Opposite pairs (P1,P4), (P2,P5), (P3,P6) realising the diameter.
Diameter euclidean_diameter(const Orbit2D& o);

/// Whether x attains the largest pairwise distance inside its own orbit.
/// The origin (diameter 0) is never diametral.
bool is_diametral(const Point2& x);
bool is_diametral(const Orbit2D& o, const Point2& node);

/// Lexicographically largest node; identifies the orbit.
Point2 canonical_rep(const Orbit2D& o);

/// Closed triangles with integer-or-half-integer vertices, stored doubled.
struct Triangle {
  std::array<Point2, 3> vertices2x;
  bool contains(const Point2& p) const;
};

struct FundamentalTriangles {
  std::vector<Point2> upper;  // triangle (M,M), (M/2,M), O: x <= y <= 2x
  std::vector<Point2> lower;  // triangle (M,M), (M,M/2), O: y <= x <= 2y
};

FundamentalTriangles fundamental_triangles(std::int64_t M);

/// Named hexagon points for side M. Capital letters are the vertices
/// A=(M,M), B=(0,M), C=(-M,0), D=(-M,-M), E=(0,-M), F=(M,0); Greek letters are
/// side midpoints alpha on AB, beta on BC, gamma on CD, delta on DE, epsilon on EF, eta on FA.
enum class HexPoint { O, A, B, C, D, E, F, alpha, beta, gamma, delta, epsilon, eta };
Point2 hex_point2x(HexPoint p, std::int64_t M);
Triangle hex_triangle(HexPoint p, HexPoint q, HexPoint r, std::int64_t M);

/// The six triangles visited from (A, alpha, O) by K_1, K_2, K_1, ...
std::array<Triangle, 6> top_triangle_cycle(std::int64_t M);
/// The six triangles visited from (A, eta, O) by K_1, K_2, K_1, ...
std::array<Triangle, 6> right_triangle_cycle(std::int64_t M);

}  // namespace aughts

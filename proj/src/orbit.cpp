#include "aughts/orbit.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace aughts {

LatticePoint make_point(std::initializer_list<std::int64_t> coords) {
  return make_point(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

LatticePoint make_point(std::span<const std::int64_t> coords) {
  if (coords.empty()) throw ArgumentError("a lattice point needs at least one coordinate");
  LatticePoint x(static_cast<Index>(coords.size()));
  for (std::size_t k = 0; k < coords.size(); ++k) x(static_cast<Index>(k)) = coords[k];
  return x;
}

std::vector<Index> aught_word(SeedOrder order) {
  if (order == SeedOrder::k1_first) return {1, 2, 1, 2, 1, 2};
  return {2, 1, 2, 1, 2, 1};
}

std::size_t Trajectory::distinct_interior() const {
  std::set<LatticePoint, LexLess> seen;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) seen.insert(path[k]);
  if (path.size() == 1) seen.insert(path[0]);
  return seen.size();
}

Trajectory run_word(const LatticePoint& x, std::span<const Index> word) {
  if (x.size() < 1) throw ArgumentError("empty lattice point");
  Trajectory t;
  t.start = x;
  t.word.assign(word.begin(), word.end());
  t.path.reserve(word.size() + 1);
  t.path.push_back(x);
  for (Index j : word) t.path.push_back(apply_k(t.path.back(), j));
  t.closed = t.path.back() == t.path.front();
  return t;
}

namespace {

void require_reach_dimension(const LatticePoint& x) {
  if (x.size() < 1 || x.size() > kMaxReachDimension)
    throw ArgumentError("reachable-graph exploration supports dimensions 1.." + std::to_string(kMaxReachDimension));
}

}  // namespace

ReachGraph reach_graph(const LatticePoint& x, std::size_t guard) {
  require_reach_dimension(x);
  ReachGraph g;
  std::deque<LatticePoint> queue{x};
  g.nodes.insert(x);
  LexLess less;
  while (!queue.empty()) {
    LatticePoint cur = std::move(queue.front());
    queue.pop_front();
    for (Index j = 1; j <= cur.size(); ++j) {
      LatticePoint next = apply_k(cur, j);
      if (next == cur) continue;
      if (less(cur, next))
        g.edges.emplace(cur, next);
      else
        g.edges.emplace(next, cur);
      if (g.nodes.insert(next).second) {
        if (g.nodes.size() > guard) throw ResourceError("reachable graph exceeds the node guard");
        queue.push_back(std::move(next));
      }
    }
  }
  return g;
}

std::optional<std::size_t> orbit_distance(const LatticePoint& a, const LatticePoint& b, std::size_t guard) {
  if (a.size() != b.size()) throw ArgumentError("points of different dimension");
  require_reach_dimension(a);
  std::map<LatticePoint, std::size_t, LexLess> dist{{a, 0}};
  std::deque<LatticePoint> queue{a};
  while (!queue.empty()) {
    LatticePoint cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t d = dist.at(cur);
    if (cur == b) return d;
    for (Index j = 1; j <= cur.size(); ++j) {
      LatticePoint next = apply_k(cur, j);
      if (dist.emplace(next, d + 1).second) {
        if (dist.size() > guard) throw ResourceError("orbit exploration exceeds the node guard");
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

namespace {

void require_bounded(const Point2& x) {
  if (std::abs(x(0)) > kCoordinateBound || std::abs(x(1)) > kCoordinateBound)
    throw ArithmeticError("2D orbit inputs must satisfy |x_i| <= 2^31");
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

std::int64_t semi_perimeter(const Point2& x) {
  require_bounded(x);
  return abs64(2 * x(0) - x(1)) + abs64(x(0) + x(1)) + abs64(2 * x(1) - x(0));
}

std::int64_t semi_perimeter(const LatticePoint& x) {
  if (x.size() != 2) throw ArgumentError("semi-perimeter is defined for plane points");
  return semi_perimeter(Point2(x(0), x(1)));
}

std::int64_t box_side(const Point2& x) {
  require_bounded(x);
  return std::max({abs64(x(0) + x(1)), abs64(x(0) - 2 * x(1)), abs64(x(1) - 2 * x(0))});
}

Orbit2D::Orbit2D(const Point2& seed, SeedOrder order) {
  require_bounded(seed);
  const std::int64_t x1 = seed(0);
  const std::int64_t x2 = seed(1);
  const std::array<Point2, 6> k1_first{Point2(x1, x2),       Point2(-x1 + x2, x2), Point2(-x1 + x2, -x1),
                                       Point2(-x2, -x1),     Point2(-x2, x1 - x2), Point2(x1, x1 - x2)};
  if (order == SeedOrder::k1_first) {
    cycle_ = k1_first;
  } else {
    cycle_[0] = k1_first[0];
    for (std::size_t k = 1; k < 6; ++k) cycle_[k] = k1_first[6 - k];
  }
  for (const Point2& p : cycle_) {
    if (std::find(nodes_.begin(), nodes_.begin() + static_cast<long>(count_), p) == nodes_.begin() + static_cast<long>(count_))
      nodes_[count_++] = p;
  }
  const std::int64_t a = abs64(2 * x1 - x2);
  const std::int64_t b = abs64(x1 + x2);
  const std::int64_t c = abs64(2 * x2 - x1);
  semi_perimeter_ = a + b + c;
  box_side_ = semi_perimeter_ / 2;
  diam_multiplier_ = std::max({a, b, c});
}

Orbit2D orbit2d(const Point2& x, SeedOrder order) { return Orbit2D(x, order); }

Orbit2D orbit2d(const LatticePoint& x, SeedOrder order) {
  if (x.size() != 2) throw ArgumentError("orbit2d needs a plane point");
  return Orbit2D(Point2(x(0), x(1)), order);
}

Diameter euclidean_diameter(const Orbit2D& o) {
  Diameter d;
  d.multiplier = o.diam_multiplier();
  if (d.multiplier == 0) return d;
  const std::int64_t target = 2 * d.multiplier * d.multiplier;
  const auto cyc = o.cycle();
  LexLess less;
  for (std::size_t k = 0; k < 3; ++k) {
    if (dist2(cyc[k], cyc[k + 3]) != target) continue;
    auto pair = less(cyc[k + 3], cyc[k]) ? std::make_pair(cyc[k + 3], cyc[k]) : std::make_pair(cyc[k], cyc[k + 3]);
    const bool dup = std::any_of(d.pairs.begin(), d.pairs.end(), [&](const auto& q) {
      return q.first == pair.first && q.second == pair.second;
    });
    if (!dup) d.pairs.push_back(pair);
  }
  return d;
}

bool is_diametral(const Orbit2D& o, const Point2& node) {
  const auto nodes = o.nodes();
  std::int64_t best = 0;
  std::int64_t mine = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t k = i + 1; k < nodes.size(); ++k) best = std::max(best, dist2(nodes[i], nodes[k]));
    mine = std::max(mine, dist2(node, nodes[i]));
  }
  return best > 0 && mine == best;
}

bool is_diametral(const Point2& x) { return is_diametral(Orbit2D(x), x); }

Point2 canonical_rep(const Orbit2D& o) {
  const auto nodes = o.nodes();
  return *std::max_element(nodes.begin(), nodes.end(), LexLess{});
}

bool Triangle::contains(const Point2& p) const {
  const Point2 q = 2 * p;
  auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
    return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
  };
  const std::int64_t d1 = cross(vertices2x[0], vertices2x[1], q);
  const std::int64_t d2 = cross(vertices2x[1], vertices2x[2], q);
  const std::int64_t d3 = cross(vertices2x[2], vertices2x[0], q);
  const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(has_neg && has_pos);
}

FundamentalTriangles fundamental_triangles(std::int64_t M) {
  if (M < 1) throw ArgumentError("triangle size must be positive");
  FundamentalTriangles out;
  for (std::int64_t x = 0; x <= M; ++x) {
    for (std::int64_t y = 0; y <= M; ++y) {
      if (x <= y && y <= 2 * x) out.upper.emplace_back(x, y);
      if (y <= x && x <= 2 * y) out.lower.emplace_back(x, y);
    }
  }
  return out;
}

Point2 hex_point2x(HexPoint p, std::int64_t M) {
  const std::int64_t m = 2 * M;
  switch (p) {
    case HexPoint::O: return {0, 0};
    case HexPoint::A: return {m, m};
    case HexPoint::B: return {0, m};
    case HexPoint::C: return {-m, 0};
    case HexPoint::D: return {-m, -m};
    case HexPoint::E: return {0, -m};
    case HexPoint::F: return {m, 0};
    case HexPoint::alpha: return {M, m};
    case HexPoint::beta: return {-M, M};
    case HexPoint::gamma: return {-m, -M};
    case HexPoint::delta: return {-M, -m};
    case HexPoint::epsilon: return {M, -M};
    case HexPoint::eta: return {m, M};
  }
  return {0, 0};
}

Triangle hex_triangle(HexPoint p, HexPoint q, HexPoint r, std::int64_t M) {
  return Triangle{{hex_point2x(p, M), hex_point2x(q, M), hex_point2x(r, M)}};
}

std::array<Triangle, 6> top_triangle_cycle(std::int64_t M) {
  using H = HexPoint;
  return {hex_triangle(H::A, H::alpha, H::O, M),   hex_triangle(H::B, H::alpha, H::O, M),
          hex_triangle(H::E, H::epsilon, H::O, M), hex_triangle(H::D, H::gamma, H::O, M),
          hex_triangle(H::C, H::gamma, H::O, M),   hex_triangle(H::F, H::epsilon, H::O, M)};
}

std::array<Triangle, 6> right_triangle_cycle(std::int64_t M) {
  using H = HexPoint;
  return {hex_triangle(H::A, H::eta, H::O, M),   hex_triangle(H::B, H::beta, H::O, M),
          hex_triangle(H::E, H::delta, H::O, M), hex_triangle(H::D, H::delta, H::O, M),
          hex_triangle(H::C, H::beta, H::O, M),  hex_triangle(H::F, H::eta, H::O, M)};
}

}  // namespace aughts

#include <algorithm>
#include <random>
#include <set>

#include "aughts/orbit.hpp"
#include "test_util.hpp"

using namespace aughts;

namespace {

std::vector<Index> hamiltonian_word() {
  const std::vector<Index> half{3, 2, 1, 2, 1, 2, 3, 1, 2, 1, 2, 1};
  std::vector<Index> w = half;
  w.insert(w.end(), half.begin(), half.end());
  return w;
}

Point2 p2(std::int64_t a, std::int64_t b) { return Point2(a, b); }

std::int64_t taxicab(const Point2& a, const Point2& b) { return (a - b).cwiseAbs().sum(); }

bool in_cone(const Point2& x) { return 2 * x(1) - x(0) >= 0 && 2 * x(0) - x(1) >= 0; }

std::int64_t brute_max_dist2(const Orbit2D& o) {
  std::int64_t best = 0;
  for (const auto& a : o.nodes())
    for (const auto& b : o.nodes()) best = std::max(best, dist2(a, b));
  return best;
}

}  // namespace

TEST_SUITE("orbit_engine") {
  TEST_CASE("apply_k examples") {
    CHECK(apply_k(make_point({3, 5}), 1) == make_point({2, 5}));
    CHECK(apply_k(make_point({1, 2}), 1) == make_point({1, 2}));
    CHECK(apply_k(make_point({10, 8, 15}), 3) == make_point({10, 8, -17}));
    CHECK(apply_k(p2(3, 5), 2) == p2(3, -2));
    CHECK_THROWS_AS(apply_k(make_point({1, 2}), 3), ArgumentError);
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(apply_k(make_point({-big, big}), 1), ArithmeticError);
  }

  TEST_CASE("operators are involutions and pairs have order three") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> v(-1000, 1000);
    for (int t = 0; t < 500; ++t) {
      const Index n = 1 + t % 6;
      LatticePoint x(n);
      for (Index k = 0; k < n; ++k) x(k) = v(rng);
      for (Index j = 1; j <= n; ++j) {
        CHECK(apply_k(apply_k(x, j), j) == x);
        for (Index l = 1; l <= n; ++l) {
          if (l == j) continue;
          std::vector<Index> w;
          for (int r = 0; r < 3; ++r) w.insert(w.end(), {j, l});
          CHECK(run_word(x, w).closed);
        }
      }
    }
  }

  TEST_CASE("run_word") {
    const auto loop = run_word(make_point({10, 8, 15}), hamiltonian_word());
    CHECK(loop.closed);
    CHECK(loop.word.size() == 24);
    CHECK(loop.distinct_interior() == 24);

    const auto empty = run_word(make_point({4, -7}), {});
    CHECK(empty.closed);
    CHECK(empty.path.size() == 1);

    const auto six = run_word(make_point({3, 5}), aught_word());
    CHECK(six.closed);
    CHECK(six.path.size() == 7);
    for (std::size_t k = 1; k < 6; ++k) CHECK(six.path[k] != six.path[0]);
  }

  TEST_CASE("reach_graph") {
    const auto g = reach_graph(make_point({10, 8, 15}));
    CHECK(g.nodes.size() == 24);
    CHECK(g.edges.size() == 36);
    for (Index n = 1; n <= 6; ++n) {
      const auto o = reach_graph(LatticePoint::Zero(n));
      CHECK(o.nodes.size() == 1);
      CHECK(o.edges.empty());
    }
    const auto d = reach_graph(make_point({1, 2}));
    CHECK(d.nodes.size() == 3);
    CHECK(d.edges.size() == 2);
    CHECK(d.nodes.contains(make_point({1, -1})));
    CHECK(d.nodes.contains(make_point({-2, -1})));
    CHECK_THROWS_AS(reach_graph(make_point({10, 8, 15}), 10), ResourceError);
    CHECK_THROWS_AS(reach_graph(LatticePoint::Zero(7)), ArgumentError);
  }

  TEST_CASE("the traced 24-step cycle visits every node of the reachable graph") {
    const auto g = reach_graph(make_point({10, 8, 15}));
    const auto loop = run_word(make_point({10, 8, 15}), hamiltonian_word());
    std::set<LatticePoint, LexLess> visited(loop.path.begin(), loop.path.end());
    CHECK(visited.size() == g.nodes.size());
    for (const auto& p : visited) CHECK(g.nodes.contains(p));
    for (std::size_t k = 0; k + 1 < loop.path.size(); ++k) {
      auto a = loop.path[k], b = loop.path[k + 1];
      if (LexLess{}(b, a)) std::swap(a, b);
      CHECK(g.edges.contains({a, b}));
    }
  }

  TEST_CASE("Orbit2D examples") {
    const Orbit2D a(p2(1, 0));
    CHECK(a.size() == 6);
    const std::vector<Point2> expected{p2(1, 0), p2(-1, 0), p2(-1, -1), p2(0, -1), p2(0, 1), p2(1, 1)};
    CHECK(std::equal(a.nodes().begin(), a.nodes().end(), expected.begin(), expected.end()));
    CHECK(a.semi_perimeter() == 4);
    CHECK(a.perimeter() == 8);
    CHECK(a.box_side() == 2);

    const Orbit2D z(p2(0, 0));
    CHECK(z.size() == 1);
    CHECK(z.semi_perimeter() == 0);
    CHECK(z.box_side() == 0);
    CHECK(z.diam_multiplier() == 0);

    const Orbit2D d(p2(1, 2));
    CHECK(d.size() == 3);
    CHECK(d.semi_perimeter() == 6);
    CHECK(d.box_side() == 3);

    CHECK_THROWS_AS(Orbit2D(p2(kCoordinateBound + 1, 0)), ArithmeticError);
  }

  TEST_CASE("semi-perimeter examples") {
    CHECK(semi_perimeter(p2(7, 0)) == 28);
    CHECK(semi_perimeter(p2(0, 0)) == 0);
    CHECK(semi_perimeter(p2(3, 5)) == 16);
    CHECK(semi_perimeter(make_point({3, 5})) == 16);
    const Orbit2D o(p2(3, 5));
    std::int64_t jumps = 0;
    for (std::size_t k = 0; k < 6; ++k) jumps += taxicab(o.cycle()[k], o.cycle()[(k + 1) % 6]);
    CHECK(jumps == 2 * 16);
  }

  TEST_CASE("Euclidean diameter examples") {
    const auto d1 = euclidean_diameter(Orbit2D(p2(1, 0)));
    CHECK(d1.multiplier == 2);
    REQUIRE(d1.pairs.size() == 1);
    CHECK(d1.pairs[0].first == p2(-1, -1));
    CHECK(d1.pairs[0].second == p2(1, 1));
    CHECK(euclidean_diameter(Orbit2D(p2(0, 0))).multiplier == 0);
    CHECK(euclidean_diameter(Orbit2D(p2(0, 0))).pairs.empty());
    const Orbit2D o(p2(2, 3));
    const auto d2 = euclidean_diameter(o);
    CHECK(d2.multiplier == 5);
    REQUIRE(d2.pairs.size() == 1);
    CHECK(((d2.pairs[0].first == o.cycle()[0] && d2.pairs[0].second == o.cycle()[3]) ||
           (d2.pairs[0].first == o.cycle()[3] && d2.pairs[0].second == o.cycle()[0])));
  }

  TEST_CASE("diametral and canonical examples") {
    CHECK(is_diametral(p2(2, 3)));
    CHECK(!is_diametral(p2(1, 0)));
    CHECK(!is_diametral(p2(0, 0)));
    CHECK(is_diametral(p2(1, 2)));
    CHECK(is_diametral(p2(-2, -1)));
    CHECK(!is_diametral(p2(1, -1)));
    CHECK(canonical_rep(Orbit2D(p2(1, 0))) == p2(1, 1));
    CHECK(canonical_rep(Orbit2D(p2(0, 0))) == p2(0, 0));
    CHECK(canonical_rep(Orbit2D(p2(-2, -1))) == p2(1, 2));
  }

  TEST_CASE("orbit distance") {
    CHECK(orbit_distance(make_point({4, 9}), make_point({4, 9})) == 0u);
    CHECK(!orbit_distance(make_point({1, 0}), make_point({2, 0})).has_value());
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> v(-100, 100);
    int tested = 0;
    while (tested < 200) {
      const Orbit2D o(p2(v(rng), v(rng)));
      if (o.size() != 6) continue;
      ++tested;
      const auto& c = o.cycle();
      CHECK(orbit_distance(make_point({c[0](0), c[0](1)}), make_point({c[3](0), c[3](1)})) == 3u);
    }
  }

  TEST_CASE("seed order reverses the traversal") {
    for (std::int64_t x = -6; x <= 6; ++x)
      for (std::int64_t y = -6; y <= 6; ++y) {
        const Orbit2D a(p2(x, y), SeedOrder::k1_first);
        const Orbit2D b(p2(x, y), SeedOrder::k2_first);
        CHECK(b.cycle()[0] == a.cycle()[0]);
        for (std::size_t k = 1; k < 6; ++k) CHECK(b.cycle()[k] == a.cycle()[6 - k]);
        const auto t = run_word(make_point({x, y}), aught_word(SeedOrder::k2_first));
        for (std::size_t k = 0; k < 6; ++k) CHECK(t.path[k] == LatticePoint(b.cycle()[k]));
      }
  }

  TEST_CASE("exhaustive orbit properties on [-60,60]^2") {
    int failures = 0;
    auto fail = [&](bool ok) { failures += ok ? 0 : 1; };
    const auto word = aught_word();
    for (std::int64_t x1 = -60; x1 <= 60; ++x1) {
      for (std::int64_t x2 = -60; x2 <= 60; ++x2) {
        const Point2 x(x1, x2);
        const Orbit2D o(x);
        const auto cyc = o.cycle();
        const auto nodes = o.nodes();

        // the closed form is the traced path
        const auto t = run_word(make_point({x1, x2}), word);
        fail(t.closed);
        for (std::size_t k = 0; k < 6; ++k) fail(t.path[k] == LatticePoint(cyc[k]));
        fail(reach_graph(make_point({x1, x2})).nodes.size() == o.size());

        // size and degeneracy
        const bool on_lines = x2 == 2 * x1 || x1 == 2 * x2 || x1 == -x2;
        if (x1 == 0 && x2 == 0)
          fail(o.size() == 1);
        else if (on_lines)
          fail(o.size() == 3);
        else
          fail(o.size() == 6);

        // six admissible coordinate values
        const std::set<std::int64_t> values{x1, -x1, x2, -x2, x1 - x2, x2 - x1};
        for (const auto& p : nodes) fail(values.contains(p(0)) && values.contains(p(1)));

        // every step moves at most one coordinate; 6-node orbits always move one,
        // and the three nodes of a degenerate orbit form a path
        for (std::size_t k = 0; k < 6; ++k) {
          const auto& a = cyc[k];
          const auto& b = cyc[(k + 1) % 6];
          fail(a(0) == b(0) || a(1) == b(1));
          if (o.size() == 6) fail(a != b);
        }
        if (o.size() == 3) {
          int single = 0;
          for (std::size_t i = 0; i < 3; ++i) {
            const auto& a = nodes[i];
            const auto& b = nodes[(i + 1) % 3];
            single += (a(0) == b(0)) != (a(1) == b(1)) ? 1 : 0;
          }
          fail(single == 2);
        }

        // opposite taxicab jumps are equal
        for (std::size_t k = 0; k < 3; ++k)
          fail(taxicab(cyc[k], cyc[k + 1]) == taxicab(cyc[k + 3], cyc[(k + 4) % 6]));

        // perimeter and bounding box
        fail(o.perimeter() % 4 == 0);
        fail(2 * o.box_side() == o.semi_perimeter());
        fail(o.box_side() == box_side(x));
        std::int64_t xmin = x1, xmax = x1, ymin = x2, ymax = x2;
        for (const auto& p : nodes) {
          xmin = std::min(xmin, p(0));
          xmax = std::max(xmax, p(0));
          ymin = std::min(ymin, p(1));
          ymax = std::max(ymax, p(1));
        }
        fail(xmax - xmin == o.box_side() && ymax - ymin == o.box_side());

        // diameter against brute force
        fail(brute_max_dist2(o) == 2 * o.diam_multiplier() * o.diam_multiplier());

        // homothety
        for (std::int64_t s : {-1, 2, 3}) {
          const Orbit2D scaled(s * x);
          for (std::size_t k = 0; k < 6; ++k) fail(scaled.cycle()[k] == s * cyc[k]);
        }

        // diametral cone
        if (o.size() == 6) fail(is_diametral(x) == (in_cone(x) || in_cone(-x)));
        if (o.size() == 3) {
          const std::int64_t best = brute_max_dist2(o);
          std::int64_t mine = 0;
          for (const auto& p : nodes) mine = std::max(mine, dist2(x, p));
          fail(is_diametral(x) == (mine == best));
        }
      }
    }
    CHECK(failures == 0);
  }

  TEST_CASE("fundamental triangles") {
    const auto t2 = fundamental_triangles(2);
    auto has = [](const std::vector<Point2>& v, Point2 p) { return std::find(v.begin(), v.end(), p) != v.end(); };
    for (auto p : {p2(1, 2), p2(2, 2), p2(0, 0), p2(1, 1)}) CHECK(has(t2.upper, p));
    for (auto p : {p2(2, 1), p2(2, 2), p2(0, 0), p2(1, 1)}) CHECK(has(t2.lower, p));
    const auto t1 = fundamental_triangles(1);
    CHECK(has(t1.upper, p2(1, 1)));
    CHECK(has(t1.lower, p2(1, 1)));

    const std::int64_t M = 50;
    const auto t = fundamental_triangles(M);
    std::set<Point2, LexLess> reps;
    for (const auto& p : t.upper) reps.insert(canonical_rep(Orbit2D(p)));
    for (const auto& p : t.lower) reps.insert(canonical_rep(Orbit2D(p)));
    int missing = 0;
    for (std::int64_t x = 0; x <= M; ++x)
      for (std::int64_t y = 0; y <= M; ++y)
        if (!reps.contains(canonical_rep(Orbit2D(p2(x, y))))) ++missing;
    CHECK(missing == 0);
  }

  TEST_CASE("hexagon triangle cycles") {
    const std::int64_t M = 12;
    for (const auto& cycle : {top_triangle_cycle(M), right_triangle_cycle(M)}) {
      for (std::size_t k = 0; k < 6; ++k) {
        const Triangle& from = cycle[k];
        const Triangle& to = cycle[(k + 1) % 6];
        const Index op = k % 2 == 0 ? 1 : 2;
        std::size_t samples = 0;
        for (std::int64_t x = -M; x <= M; ++x)
          for (std::int64_t y = -M; y <= M; ++y) {
            const Point2 p(x, y);
            if (!from.contains(p)) continue;
            ++samples;
            CHECK(to.contains(apply_k(p, op)));
          }
        CHECK(samples > 10);
      }
    }
  }

  TEST_CASE("opposite hexagon triangles are three steps apart") {
    const std::int64_t M = 12;
    using H = HexPoint;
    const auto obb = hex_triangle(H::O, H::B, H::beta, M);
    const auto ocb = hex_triangle(H::O, H::C, H::beta, M);
    const auto oee = hex_triangle(H::O, H::E, H::epsilon, M);
    const auto ofe = hex_triangle(H::O, H::F, H::epsilon, M);
    std::size_t samples = 0;
    for (std::int64_t x = -M; x <= M; ++x)
      for (std::int64_t y = -M; y <= M; ++y) {
        const Point2 p(x, y);
        if (Orbit2D(p).size() != 6) continue;
        if (obb.contains(p)) {
          const Point2 q = apply_k(apply_k(apply_k(p, 2), 1), 2);
          CHECK(ocb.contains(q));
          CHECK(orbit_distance(make_point({x, y}), make_point({q(0), q(1)})) == 3u);
          ++samples;
        }
        if (oee.contains(p)) {
          const Point2 q = apply_k(apply_k(apply_k(p, 1), 2), 1);
          CHECK(ofe.contains(q));
          CHECK(orbit_distance(make_point({x, y}), make_point({q(0), q(1)})) == 3u);
          ++samples;
        }
      }
    CHECK(samples > 20);
  }
}

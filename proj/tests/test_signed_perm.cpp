#include <random>

#include "aughts/group_atlas.hpp"
#include "aughts/signed_perm.hpp"
#include "test_util.hpp"

using namespace aughts;
using aughts::test::rows;

TEST_SUITE("signed_perm_algebra") {
  TEST_CASE("permutation basics") {
    const auto t = Permutation::transposition(4, 2, 4);
    CHECK(t.images == std::vector<int>{1, 4, 3, 2});
    CHECK(compose(t, t).is_identity());
    CHECK(order(Permutation::from_images({2, 3, 1, 5, 4})) == 6);
    CHECK(cycle_string(Permutation::from_images({2, 3, 1, 5, 4})) == "(1 2 3)(4 5)");
    CHECK(cycle_string(Permutation::identity(3)) == "()");
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), ArgumentError);
    const auto p = Permutation::from_images({2, 3, 1});
    const auto q = Permutation::from_images({1, 3, 2});
    CHECK(compose(p, q)(2) == p(q(2)));
    CHECK(compose(p, inverse(p)).is_identity());
  }

  TEST_CASE("product_left_to_right lets the first factor act first") {
    const auto a = Permutation::transposition(3, 1, 2);
    const auto b = Permutation::transposition(3, 1, 3);
    // 1 -a-> 2 -b-> 2, 2 -a-> 1 -b-> 3, 3 -a-> 3 -b-> 1
    CHECK(product_left_to_right({a, b}).images == std::vector<int>{2, 3, 1});
  }

  TEST_CASE("to_matrix examples") {
    for (int n = 1; n <= 6; ++n)
      for (int h = 1; h <= n; ++h) CHECK(to_matrix(generator(n, h)) == make_k(n, h));
    CHECK(to_matrix(identity_element(4)) == SmallIntMatrix::Identity(4, 4));
    const SignedPermElement swap{Permutation::transposition(3, 1, 2), 1, 0};
    CHECK(to_matrix(swap) == rows({{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}));
    CHECK(to_matrix(swap) == k_product(3, std::vector<Index>{1, 2, 1}));
    CHECK_THROWS_AS(to_matrix(swap, 4), ArgumentError);
  }

  TEST_CASE("msih_mul examples") {
    const auto id = identity_element(3);
    CHECK(msih_mul(id, id) == id);
    for (int j = 1; j <= 3; ++j) CHECK(normalize(msih_mul(generator(3, j), generator(3, j))) == id);
  }

  TEST_CASE("msih_mul agrees with the matrix product on random pairs at n = 4") {
    const auto cat = enumerate_group(4);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
    int failures = 0;
    for (int t = 0; t < 200; ++t) {
      const auto& a = cat.elements[pick(rng)];
      const auto& b = cat.elements[pick(rng)];
      if (to_matrix(msih_mul(a, b)) != mat_mul(to_matrix(a), to_matrix(b))) ++failures;
    }
    CHECK(failures == 0);
  }

  TEST_CASE("composition convention is pinned by the matrix oracle") {
    const SignedPermElement a{Permutation::from_images({2, 3, 1}), 1, 0};
    const SignedPermElement b{Permutation::from_images({1, 3, 2}), 1, 0};
    const auto prod = msih_mul(a, b);
    CHECK(prod.sigma == compose(b.sigma, a.sigma));
    CHECK(to_matrix(prod) == mat_mul(to_matrix(a), to_matrix(b)));
  }

  TEST_CASE("inverses") {
    for (int h = 1; h <= 4; ++h) CHECK(msih_inverse(generator(4, h)) == generator(4, h));
    const SignedPermElement s{Permutation::from_images({3, 1, 2, 4}), 1, 0};
    CHECK(msih_inverse(s) == SignedPermElement{inverse(s.sigma), 1, 0});

    const auto cat = enumerate_group(5);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
    int tested = 0;
    while (tested < 50) {
      const auto& e = cat.elements[pick(rng)];
      if (e.eps != 1) continue;
      ++tested;
      CHECK(normalize(msih_mul(e, msih_inverse(e))) == identity_element(5));
      CHECK(mat_mul(to_matrix(e), to_matrix(msih_inverse(e))) == SmallIntMatrix::Identity(5, 5));
    }
  }

  TEST_CASE("round trip and inverse law on every element for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      const auto cat = enumerate_group(n);
      int failures = 0;
      for (const auto& e : cat.elements) {
        if (matrix_to_msih(to_matrix(e)) != normalize(e)) ++failures;
        if (normalize(msih_mul(e, msih_inverse(e))) != identity_element(n)) ++failures;
        if (normalize(msih_mul(msih_inverse(e), e)) != identity_element(n)) ++failures;
      }
      CHECK(failures == 0);
    }
  }

  TEST_CASE("matrix_to_msih decodes displayed matrices") {
    CHECK(matrix_to_msih(make_k(3, 2)) == generator(3, 2));
    CHECK(matrix_to_msih(SmallIntMatrix::Identity(4, 4)) == identity_element(4));
    const auto m = k_product(4, std::vector<Index>{2, 4, 2});
    const auto e = matrix_to_msih(m);
    CHECK(e.eps == 0);
    CHECK(e.sigma == Permutation::transposition(4, 2, 4));
    CHECK(to_matrix(e) == m);
    CHECK_THROWS_AS(matrix_to_msih(rows({{1, 1}, {0, 1}})), NotGroupElement);
    CHECK_THROWS_AS(matrix_to_msih(rows({{0, 1}, {1, 0}})), NotGroupElement);  // wrong signs
    CHECK_THROWS_AS(matrix_to_msih(rows({{1, 0}, {1, 0}})), NotGroupElement);
  }

  TEST_CASE("text form round trips") {
    const auto cat = enumerate_group(3);
    for (const auto& e : cat.elements) CHECK(parse_element(to_text(e)) == e);
    CHECK(to_text(generator(3, 2)) == "M(σ=[1,2,3];h=2;eps=1)");
    CHECK_THROWS_AS(parse_element("M(σ=[1,1,3];h=2;eps=1)"), ArgumentError);
    CHECK_THROWS_AS(parse_element("garbage"), ArgumentError);
  }
}

#include <random>

#include "doctest.h"
#include "valmax/lattice.hpp"

using namespace valmax;

TEST_CASE("inf is the componentwise minimum") {
  CHECK(inf(Point{3, 1}, Point{2, 5}) == Point{2, 1});
  CHECK(inf(Point{0, 0, 0}, Point{0, 0, 0}) == Point{0, 0, 0});
  CHECK(inf(Point{1, 4, 2}, Point{4, 1, 2}) == Point{1, 1, 2});
  CHECK_THROWS_AS(inf(Point{1, 2}, Point{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("inf is an idempotent commutative associative meet") {
  std::mt19937_64 rng(7);
  auto rnd = [&](int p) {
    Point v = zeros(p);
    for (int i = 0; i < p; ++i) v[i] = static_cast<Coord>(rng() % 21) - 10;
    return v;
  };
  for (int rep = 0; rep < 200; ++rep) {
    const int p = 1 + static_cast<int>(rng() % 4);
    Point a = rnd(p), b = rnd(p), c = rnd(p);
    CHECK(inf(a, a) == a);
    CHECK(inf(a, b) == inf(b, a));
    CHECK(inf(inf(a, b), c) == inf(a, inf(b, c)));
  }
}

TEST_CASE("checked coordinate arithmetic flags overflow") {
  CHECK(Point{1, 2} + Point{3, 4} == Point{4, 6});
  CHECK(Point{1, 2} - Point{3, 4} == Point{-2, -2});
  const Coord big = std::numeric_limits<Coord>::max();
  const Point a{big, 0}, b{1, 0};
  CHECK_THROWS_AS(a + b, std::overflow_error);
}

TEST_CASE("delta membership with a fixed index set") {
  CHECK(in_delta_j(Point{1, 2, 3}, Point{1, 1, 1}, IndexSet(3, {0})));
  CHECK_FALSE(in_delta_j(Point{1, 1, 3}, Point{1, 1, 1}, IndexSet(3, {0})));
  CHECK(in_delta_j(Point{0, 0, 0}, Point{0, 0, 0}, IndexSet::full(3)));
  CHECK_THROWS_AS(in_delta_j(Point{1, 2}, Point{0, 0}, IndexSet::of_bits(2, 0)), std::invalid_argument);
}

TEST_CASE("delta membership over single coordinates") {
  CHECK(in_delta(Point{0, 1, 1}, Point{0, 0, 0}));
  CHECK_FALSE(in_delta(Point{0, 0, 1}, Point{0, 0, 0}));
  CHECK_FALSE(in_delta(Point{1, 1}, Point{0, 0}));
}

TEST_CASE("delta members dominate the base point and differ from it") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 500; ++rep) {
    const int p = 2 + static_cast<int>(rng() % 3);
    Point v = zeros(p), alpha = zeros(p);
    for (int i = 0; i < p; ++i) {
      v[i] = static_cast<Coord>(rng() % 9) - 4;
      alpha[i] = static_cast<Coord>(rng() % 9) - 4;
    }
    if (in_delta(v, alpha)) {
      CHECK(leq(alpha, v));
      CHECK(v != alpha);
    }
  }
}

TEST_CASE("delta sets of distinct index sets are disjoint") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 500; ++rep) {
    const int p = 2 + static_cast<int>(rng() % 3);
    Point v = zeros(p), alpha = zeros(p);
    for (int i = 0; i < p; ++i) {
      v[i] = static_cast<Coord>(rng() % 7) - 3;
      alpha[i] = static_cast<Coord>(rng() % 7) - 3;
    }
    int hits = 0;
    for (std::uint32_t bits = 1; bits < (1u << p); ++bits)
      if (in_delta_j(v, alpha, IndexSet::of_bits(p, bits))) ++hits;
    CHECK(hits <= 1);
  }
}

TEST_CASE("box iteration ascends lexicographically and is complete") {
  Box b(Point{0, -1}, Point{2, 1});
  CHECK(b.size() == 9);
  std::vector<Point> seen;
  for (const Point& v : b) seen.push_back(v);
  REQUIRE(seen.size() == 9);
  CHECK(seen.front() == Point{0, -1});
  CHECK(seen.back() == Point{2, 1});
  for (std::size_t k = 1; k < seen.size(); ++k) CHECK(lex_compare(seen[k - 1], seen[k]) < 0);
  for (std::size_t k = 0; k < seen.size(); ++k) {
    CHECK(b.index_of(seen[k]) == k);
    CHECK(b.point_at(k) == seen[k]);
  }
  CHECK_THROWS_AS(Box(Point{1, 0}, Point{0, 5}), std::invalid_argument);
}

TEST_CASE("descending box scan visits every point until accepted") {
  Box b(Point{0, 0}, Point{1, 2});
  std::vector<Point> seen;
  const bool hit = any_point_desc(b, [&](const Point& v) {
    seen.push_back(v);
    return false;
  });
  CHECK_FALSE(hit);
  CHECK(seen.size() == b.size());
  CHECK(seen.front() == Point{1, 2});
  CHECK(seen.back() == Point{0, 0});
  CHECK(any_point_desc(b, [&](const Point& v) { return v == Point{0, 1}; }));
}

TEST_CASE("index sets expose indices and complements") {
  IndexSet j(4, {0, 2});
  CHECK(j.size() == 2);
  CHECK(j.indices() == std::vector<int>{0, 2});
  CHECK(j.complement().indices() == std::vector<int>{1, 3});
  CHECK(IndexSet::full(3).is_full());
  CHECK_THROWS_AS(IndexSet(2, {5}), std::invalid_argument);
}

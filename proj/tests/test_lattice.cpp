#include "oracles.hpp"

#include <doctest.h>

using namespace fano;

TEST_SUITE("lattice") {
  TEST_CASE("det2") {
    CHECK(det2({1, 0}, {0, 1}) == 1);
    CHECK(det2({1, 1}, {2, 3}) == 1);
    CHECK(det2({2, 1}, {4, 2}) == 0);
  }

  TEST_CASE("generates_group") {
    CHECK(generates_group(std::array{Vec2{1, 0}, Vec2{0, 1}}));
    CHECK_FALSE(generates_group(std::array{Vec2{2, 0}, Vec2{0, 1}}));
    // elementary divisors 1, 1
    CHECK(generates_group(std::array{Vec2{1, 1}, Vec2{1, -1}, Vec2{1, 0}}));
    CHECK(sublattice_index(std::array{Vec2{1, 1}, Vec2{1, -1}}) == 2);
  }

  TEST_CASE("cone_hull") {
    CHECK(cone_hull(std::array{Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}}) == Cone2::wedge({1, 0}, {0, 1}));
    CHECK(cone_hull(std::span<const Vec2>{}) == Cone2::zero());
    CHECK_THROWS_AS(cone_hull(std::array{Vec2{1, 0}, Vec2{-1, 0}}), NotPointed);
    // order and repetition do not matter
    CHECK(cone_hull(std::array{Vec2{0, 2}, Vec2{3, 1}, Vec2{1, 0}, Vec2{0, 1}}) ==
          cone_hull(std::array{Vec2{1, 0}, Vec2{0, 1}}));
  }

  TEST_CASE("cone_intersect and containment") {
    const Cone2 a = Cone2::wedge({1, 0}, {1, 1}), b = Cone2::wedge({1, 1}, {0, 1});
    CHECK(cone_intersect(a, b) == Cone2::ray({1, 1}));
    CHECK(cone_intersect(a, b) == cone_intersect(b, a));
    CHECK(cone_contains(Cone2::wedge({1, 0}, {0, 1}), {1, 1}, true));
    CHECK(cone_contains(Cone2::ray({1, 0}), {2, 0}, true));
    CHECK_FALSE(cone_contains(Cone2::ray({1, 0}), {0, 0}, true));
    const Cone2 big = Cone2::wedge({1, 0}, {-1, 1});
    CHECK(cone_intersect(a, big) == a);
  }

  TEST_CASE("fiber_points") {
    const Degrees p3p2{Vec2{1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}};
    CHECK(fiber_points(p3p2, {1, 1}).size() == 12);
    CHECK(fiber_points(p3p2, {0, 0}) == std::vector<Exponent>{Exponent{}});
    const Degrees row9{Vec2{1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {-1, 1}};
    CHECK(count_fiber(row9, {2, 1}) == 40);
    CHECK(in_monoid(row9, {2, 1}, mask_of({0, 4})));
    CHECK_FALSE(in_monoid(row9, {2, 1}, mask_of({4, 5, 6})));
  }

  TEST_CASE("interior_count") {
    const LatticePolytope square = LatticePolytope::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(interior_count(square, 1) == 0);
    CHECK(interior_count(square, 3) == 4);
    const LatticePolytope simplex = LatticePolytope::hull({{0, 0}, {1, 0}, {0, 1}});
    CHECK(interior_count(simplex, 3) == 1);
    // a segment inside Z^3 is measured in its own lattice
    const LatticePolytope seg = LatticePolytope::hull({{0, 0, 0}, {2, 2, 2}});
    CHECK(seg.dim() == 1);
    CHECK(interior_count(seg, 1) == 1);
  }

  TEST_CASE("is_dolgachev") {
    // fiber of (1,2) for degrees (1,0)^4 (0,1)^2 (-2,1)
    const Degrees row12{Vec2{1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {-2, 1}};
    std::vector<Point> pts;
    for (const auto& e : fiber_points(row12, {1, 2})) pts.emplace_back(e.begin(), e.end());
    CHECK(is_dolgachev(LatticePolytope::hull(pts)));

    CHECK_FALSE(is_dolgachev(LatticePolytope::hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));

    // Delta_3 x Delta_2 is a smooth polytope and meets every coordinate
    // hyperplane
    const Degrees p3p2{Vec2{1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}};
    pts.clear();
    for (const auto& e : fiber_points(p3p2, {1, 1})) pts.emplace_back(e.begin(), e.end());
    const LatticePolytope prod = LatticePolytope::hull(pts);
    CHECK(prod.dim() == 5);
    CHECK(prod.facets().size() == 7);
    CHECK(is_dolgachev(prod));
  }

  TEST_CASE("extreme rays") {
    // y1, y2 >= 0, y1 + y2 - y3 >= 0, y3 >= 0
    IntMat A(4, 3);
    A << 1, 0, 0, 0, 1, 0, 1, 1, -1, 0, 0, 1;
    const auto rays = extreme_rays(A);
    CHECK(rays.size() == 4);
  }
}

TEST_SUITE("properties") {
  TEST_CASE("fiber_points against box enumeration") {
    const auto r = oracle::fiber_vs_box(300, 11);
    INFO(r.summary());
    CHECK(r.ok());
  }

  TEST_CASE("Ehrhart reciprocity") {
    const auto r = oracle::ehrhart_reciprocity(120, 12);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(r.cases >= 50);
  }

  TEST_CASE("generates_group against minors") {
    const auto r = oracle::generates_group_vs_minors(5000, 13);
    INFO(r.summary());
    CHECK(r.ok());
  }

  TEST_CASE("two columns on one ray") {
    const auto r = oracle::two_on_one_ray(20000, 14);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(r.cases >= 100);
  }

  TEST_CASE("four determinants equal to one") {
    const auto r = oracle::four_determinants();
    INFO(r.summary());
    CHECK(r.ok());
  }
}

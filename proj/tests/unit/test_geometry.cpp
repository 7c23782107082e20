#include "doctest.h"
#include "lf/error.hpp"
#include "lf/predicates.hpp"
#include "lf/rational.hpp"

using namespace lf;

namespace {
Vec3 v3(int x, int y, int z) { return {Rational(x), Rational(y), Rational(z)}; }
Vec2 v2(Rational x, Rational y) { return {x, y}; }
}  // namespace

TEST_CASE("rational literals round trip") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_literal(Rational(-6) / 4) == "-3/2");
  CHECK(to_literal(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(parse_vec3("1,-2,3/4") == Vec3{1, -2, Rational(3, 4)});
}

TEST_CASE("sign of dot product") {
  CHECK(sign_dot(v3(0, 0, 1), v3(3, 0, 0)) == 0);
  CHECK(sign_dot(v3(-2, -3, -5), v3(1, 0, 0)) == -1);
  CHECK(sign_dot(v3(-2, -3, -5), v3(0, 1, -1)) == 1);
}

TEST_CASE("planar orientation") {
  CHECK(orient2d(v2(0, 0), v2(1, 0), v2(0, 1)) == 1);
  CHECK(orient2d(v2(0, 0), v2(1, 1), v2(2, 2)) == 0);
  CHECK(orient2d(v2(0, 0), v2(0, 1), v2(1, 0)) == -1);
}

TEST_CASE("spatial orientation") {
  CHECK(orient3d(v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)) == 1);
  CHECK(orient3d(v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)) == 0);
  CHECK(orient3d(v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, -1)) == -1);
}

TEST_CASE("planar segment crossings") {
  auto x = segment_crossing_2d(v2(0, 0), v2(2, 2), v2(0, 2), v2(2, 0));
  REQUIRE(x);
  CHECK(x->t1 == Rational(1, 2));
  CHECK(x->t2 == Rational(1, 2));
  CHECK_FALSE(segment_crossing_2d(v2(0, 0), v2(1, 0), v2(2, 0), v2(3, 0)));
  // (1,1) is interior to the first segment but an endpoint of the second.
  CHECK_FALSE(segment_crossing_2d(v2(0, 0), v2(2, 2), v2(1, 1), v2(3, 0)));
  CHECK_THROWS_AS(segment_crossing_2d(v2(0, 0), v2(2, 0), v2(1, 0), v2(3, 0)), Error);

  // Parametric oracle on an asymmetric pair.
  auto y = segment_crossing_2d(v2(0, 0), v2(4, 2), v2(1, 3), v2(3, -1));
  REQUIRE(y);
  const Vec2 p{Rational(4) * y->t1, Rational(2) * y->t1};
  const Vec2 q{1 + Rational(2) * y->t2, 3 - Rational(4) * y->t2};
  CHECK(p.x == q.x);
  CHECK(p.y == q.y);
}

TEST_CASE("triangle stabbing") {
  const Vec3 a = v3(0, 0, 0), b = v3(1, 0, 0), c = v3(0, 1, 0);
  const Vec3 inner{Rational(1, 4), Rational(1, 4), -1};
  const Vec3 inner_top{Rational(1, 4), Rational(1, 4), 1};
  CHECK(triangle_interior_meets_segment(a, b, c, inner, inner_top));
  CHECK_FALSE(triangle_interior_meets_segment(a, b, c, v3(0, 0, 1), v3(1, 0, 1)));
  CHECK_FALSE(triangle_interior_meets_segment(a, b, c, v3(0, 0, 0), v3(0, 0, 1)));
  // Segment lying in the plane and crossing the interior.
  CHECK(triangle_interior_meets_segment(a, b, c, Vec3{Rational(-1), Rational(1, 4), 0},
                                        Vec3{Rational(2), Rational(1, 4), 0}));
  // In the plane but only along an edge.
  CHECK_FALSE(triangle_interior_meets_segment(a, b, c, v3(-1, 0, 0), v3(2, 0, 0)));
  CHECK_THROWS_AS(triangle_interior_meets_segment(a, b, v3(2, 0, 0), inner, inner_top), Error);
  CHECK(triangle_interior_contains(a, b, c, Vec3{Rational(1, 3), Rational(1, 3), 0}));
  CHECK_FALSE(triangle_interior_contains(a, b, c, Vec3{Rational(1, 2), 0, 0}));
}

TEST_CASE("convex hull") {
  const std::vector<Vec2> square{v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1), v2(Rational(1, 2), Rational(1, 2))};
  CHECK(convex_hull_2d(square) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(convex_hull_2d({v2(0, 0), v2(3, 1), v2(1, 2)}).size() == 3);
  const std::vector<Vec2> with_mid{v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1), v2(Rational(1, 2), 0)};
  const auto hull = convex_hull_2d(with_mid);
  CHECK(hull == std::vector<std::size_t>{0, 1, 2, 3});
  // Orientation oracle: every hull turn is strictly left.
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = with_mid[hull[i]];
    const auto& q = with_mid[hull[(i + 1) % hull.size()]];
    const auto& r = with_mid[hull[(i + 2) % hull.size()]];
    CHECK(cross(q - p, r - q) > 0);
  }
  CHECK_THROWS_AS(convex_hull_2d({v2(0, 0), v2(1, 1), v2(2, 2)}), Error);
}

TEST_CASE("spatial incidences") {
  CHECK(collinear3d(v3(0, 0, 0), v3(1, 1, 1), v3(2, 2, 2)));
  CHECK_FALSE(collinear3d(v3(0, 0, 0), v3(1, 1, 1), v3(2, 2, 3)));
  CHECK(in_open_segment(v3(0, 0, 0), v3(2, 2, 2), v3(1, 1, 1)));
  CHECK_FALSE(in_open_segment(v3(0, 0, 0), v3(2, 2, 2), v3(2, 2, 2)));
  CHECK(segments_intersect_3d(v3(0, 0, 0), v3(2, 2, 0), v3(0, 2, 0), v3(2, 0, 0)));
  CHECK_FALSE(segments_intersect_3d(v3(0, 0, 0), v3(2, 2, 0), v3(0, 2, 1), v3(2, 0, 1)));
  CHECK(segments_intersect_3d(v3(0, 0, 0), v3(1, 0, 0), v3(1, 0, 0), v3(1, 5, 0)));
}

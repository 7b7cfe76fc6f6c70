#include <cmath>
#include <random>

#include "doctest.h"
#include "maxdist/geom.hpp"
#include "oracles.hpp"

using namespace maxdist;

namespace {

std::vector<Point> random_points(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  auto u = [&rng] { return std::ldexp(static_cast<double>(rng() >> 11), -53); };
  std::vector<Point> pts(n);
  for (Point& p : pts) {
    p.x = u();
    p.y = u();
  }
  return pts;
}

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

}  // namespace

TEST_CASE("convex_hull degenerate ranks") {
  const std::vector<Point> one{{0, 0}};
  CHECK(convex_hull(one).rank() == 0);
  CHECK(convex_hull(one).vertices[0] == Point{0, 0});

  const std::vector<Point> coll{{0, 0}, {1, 0}, {0.5, 0}};
  const Hull h = convex_hull(coll);
  CHECK(h.rank() == 1);
  REQUIRE(h.vertices.size() == 2);
  CHECK(h.vertices[0] == Point{0, 0});
  CHECK(h.vertices[1] == Point{1, 0});

  const std::vector<Point> dup{{2, 3}, {2, 3}, {2, 3}};
  CHECK(convex_hull(dup).rank() == 0);

  CHECK_THROWS_WITH_AS(convex_hull(std::vector<Point>{}), "empty point set",
                       std::invalid_argument);
}

TEST_CASE("convex_hull drops interior points and keeps extreme ones") {
  std::vector<Point> pts = kSquare;
  pts.push_back({0.5, 0.5});
  const Hull h = convex_hull(pts);
  CHECK(h.rank() == 2);
  CHECK(h.vertices.size() == 4);
  for (const Point& v : h.vertices) CHECK(oracle::in_hull_of(v, kSquare, 1e-12));
}

TEST_CASE("convex_hull is idempotent and matches the containment oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::vector<Point> pts = random_points(seed, 30);
    const Hull h = convex_hull(pts);
    const Hull h2 = convex_hull(h.vertices);
    REQUIRE(h.vertices.size() == h2.vertices.size());
    for (std::size_t i = 0; i < h.vertices.size(); ++i) CHECK(h.vertices[i] == h2.vertices[i]);
    // every input point lies in the hull of the reported vertices
    for (const Point& p : pts) CHECK(oracle::in_hull_of(p, h.vertices, 1e-9));
  }
}

TEST_CASE("diameter_pair on fixed shapes") {
  const Hull sq = convex_hull(kSquare);
  const DiameterInfo d = diameter_pair(sq);
  CHECK(d.length == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  // lexicographic tie-break between the two diagonals
  CHECK(d.a == Point{0, 0});
  CHECK(d.b == Point{1, 1});

  const Hull pt = convex_hull(std::vector<Point>{{3, 4}});
  CHECK(diameter_pair(pt).length == 0.0);
  CHECK(diameter_pair(pt).a == Point{3, 4});

  const Hull seg = convex_hull(std::vector<Point>{{0, 0}, {2, 0}});
  CHECK(diameter_pair(seg).length == 2.0);
}

TEST_CASE("diameter_pair equals the brute-force pairwise maximum") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::vector<Point> pts = random_points(seed + 100, 25);
    const Hull h = convex_hull(pts);
    CHECK(diameter_pair(h).length == doctest::Approx(oracle::diameter(pts)).epsilon(1e-12));
  }
}

TEST_CASE("min_width_strip on fixed shapes") {
  const std::vector<Point> coll{{0, 0}, {1, 1}, {2, 2}, {0.25, 0.25}};
  const StripFit flat = min_width_strip(coll);
  CHECK(flat.width == 0.0);
  CHECK(std::abs(flat.direction.x) == doctest::Approx(std::sqrt(0.5)));

  CHECK(min_width_strip(kSquare).width == doctest::Approx(1.0));

  const std::vector<Point> equi{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}};
  CHECK(min_width_strip(equi).width == doctest::Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("min_width_strip matches the all-pairs direction oracle") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::vector<Point> pts = random_points(seed + 200, 20);
    const StripFit fit = min_width_strip(pts);
    CHECK(fit.width == doctest::Approx(oracle::width(pts)).epsilon(1e-9));
    // every point within width/2 of the center line
    for (const Point& p : pts)
      CHECK(dist_point_line(p, fit.anchor, fit.direction) <= fit.width / 2.0 + 1e-9);
  }
}

TEST_CASE("point-segment and segment-segment distances") {
  const Segment s{{-1, 0}, {1, 0}};
  CHECK(dist_point_segment({0, 1}, s) == doctest::Approx(1.0));
  CHECK(dist_point_segment({-1, 0}, s) == 0.0);
  CHECK(dist_point_segment({2, 0}, s) == doctest::Approx(1.0));

  CHECK(dist_segment_segment({{0, -1}, {0, 1}}, {{-1, 0}, {1, 0}}) == 0.0);  // crossing
  CHECK(dist_segment_segment({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}) == doctest::Approx(1.0));
  CHECK(dist_segment_segment({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}) == doctest::Approx(1.0));
  // degenerate segments fall back to point distances
  CHECK(dist_segment_segment({{0, 0}, {0, 0}}, {{3, 4}, {3, 4}}) == doctest::Approx(5.0));
}

TEST_CASE("hull_area") {
  CHECK(hull_area(convex_hull(kSquare)) == doctest::Approx(1.0));
  CHECK(hull_area(convex_hull(std::vector<Point>{{0, 0}, {1, 0}})) == 0.0);
  CHECK(hull_area(convex_hull(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}})) ==
        doctest::Approx(0.5));
}

TEST_CASE("hull_beta_hat on fixed shapes") {
  CHECK(hull_beta_hat(convex_hull(std::vector<Point>{{0, 0}, {1, 0}})) == 0.0);
  // square: farthest vertex sits 1/sqrt(2) off a diagonal of length sqrt(2)
  CHECK(hull_beta_hat(convex_hull(kSquare)) == doctest::Approx(0.5).epsilon(1e-12));
  const std::vector<Point> equi{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}};
  CHECK(hull_beta_hat(convex_hull(equi)) == doctest::Approx(std::sqrt(3.0) / 2.0));
  // absolute variant is the same number scaled back by the diameter
  const Hull sq = convex_hull(kSquare);
  CHECK(hull_beta_hat_abs(sq) ==
        doctest::Approx(hull_beta_hat(sq) * diameter_pair(sq).length));
}

TEST_CASE("hull_beta_hat stays within the geometric range") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hull h = convex_hull(random_points(seed + 300, 3 + static_cast<int>(seed % 12)));
    const double b = hull_beta_hat(h);
    CHECK(b >= 0.0);
    CHECK(b <= std::sqrt(3.0) / 2.0 + 1e-9);
  }
}

TEST_CASE("area sandwich holds for every rank-2 hull") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hull h = convex_hull(random_points(seed + 400, 3 + static_cast<int>(seed % 10)));
    if (h.rank() != 2) continue;
    const double b = hull_beta_hat(h);
    const double d = diameter_pair(h).length;
    const double area = hull_area(h);
    CHECK(0.5 * b * d * d <= area + 1e-9);
    CHECK(area <= 2.0 * b * d * d + 1e-9);
  }
}

TEST_CASE("project_onto_segment_line basics") {
  const Segment s{{0, 0}, {2, 0}};
  CHECK(project_onto_segment_line({0, 0}, s) == 0.0);
  CHECK(project_onto_segment_line({2, 0}, s) == 1.0);
  CHECK(project_onto_segment_line({1, 5}, s) == doctest::Approx(0.5));
  CHECK_THROWS_WITH_AS(project_onto_segment_line({1, 1}, Segment{{3, 3}, {3, 3}}),
                       "projection undefined", std::invalid_argument);
}

TEST_CASE("hull vertices project into the unit range of a diameter segment") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hull h = convex_hull(random_points(seed + 500, 2 + static_cast<int>(seed % 20)));
    if (h.rank() == 0) continue;
    const Segment d = diameter_pair(h).segment();
    for (const Point& v : h.vertices) {
      const double t = project_onto_segment_line(v, d);
      CHECK(t >= -1e-9);
      CHECK(t <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("hull_boundary shapes") {
  CHECK(hull_boundary(convex_hull(std::vector<Point>{{1, 2}})).empty());
  const auto seg = hull_boundary(convex_hull(std::vector<Point>{{0, 0}, {1, 0}}));
  REQUIRE(seg.size() == 1);
  CHECK(seg[0].length() == doctest::Approx(1.0));
  CHECK(hull_boundary(convex_hull(kSquare)).size() == 4);
}

TEST_CASE("hull_contains with tolerance") {
  const Hull sq = convex_hull(kSquare);
  CHECK(hull_contains(sq, {0.5, 0.5}));
  CHECK(hull_contains(sq, {0, 0}));          // vertex
  CHECK(hull_contains(sq, {0.5, 0}));        // edge
  CHECK(!hull_contains(sq, {1.1, 0.5}));
  CHECK(hull_contains(sq, {1.05, 0.5}, 0.1));   // slack admits nearby points
  CHECK(!hull_contains(sq, {0.5, 1e-12}, -1e-6));  // negative tol demands interior
}

TEST_CASE("clip_line_to_hull") {
  const Hull sq = convex_hull(kSquare);
  const auto chord = clip_line_to_hull({-1, 0.5}, {1, 0}, sq);
  REQUIRE(chord.has_value());
  CHECK(chord->length() == doctest::Approx(1.0));
  CHECK(chord->p.y == doctest::Approx(0.5));

  CHECK(!clip_line_to_hull({-1, 2.0}, {1, 0}, sq).has_value());

  // diagonal through two vertices degenerates to the diagonal itself
  const auto diag = clip_line_to_hull({0, 0}, {1, 1}, sq);
  REQUIRE(diag.has_value());
  CHECK(diag->length() == doctest::Approx(std::sqrt(2.0)));

  // rank-1 hull: collinear line keeps the whole segment, crossing line a point
  const Hull seg = convex_hull(std::vector<Point>{{0, 0}, {2, 0}});
  const auto whole = clip_line_to_hull({-5, 0}, {1, 0}, seg);
  REQUIRE(whole.has_value());
  CHECK(whole->length() == doctest::Approx(2.0));
  const auto touch = clip_line_to_hull({1, -1}, {0, 1}, seg);
  REQUIRE(touch.has_value());
  CHECK(touch->length() == 0.0);
}

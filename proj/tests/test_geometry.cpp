#include <cvxlab/geometry.hpp>
#include <cvxlab/tolerances.hpp>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace cvxlab;
using namespace cvxlab::testing;

namespace {

Vec v1(double x) {
  Vec v(1);
  v << x;
  return v;
}
Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

}  // namespace

TEST_CASE("interval from halfspaces") {
  auto p = Polyhedron::from_hrep(1, {{v1(1), 1.0}, {v1(-1), 1.0}});
  REQUIRE(p.vertices().size() == 2);
  CHECK(p.vertices().front()[0] == doctest::Approx(-1.0));
  CHECK(p.vertices().back()[0] == doctest::Approx(1.0));
  CHECK(p.rays().empty());
  CHECK(p.affine_dim() == 1);
}

TEST_CASE("half-line from a single halfspace") {
  auto p = Polyhedron::from_hrep(1, {{v1(-1), 0.0}});
  REQUIRE(p.vertices().size() == 1);
  CHECK(p.vertices()[0][0] == doctest::Approx(0.0));
  REQUIRE(p.rays().size() == 1);
  CHECK(p.rays()[0][0] == doctest::Approx(1.0));
}

TEST_CASE("unit square vertices") {
  auto p = box(2, 1.0);
  REQUIRE(p.vertices().size() == 4);
  for (const Vec& v : p.vertices()) {
    CHECK(std::abs(v[0]) == doctest::Approx(1.0));
    CHECK(std::abs(v[1]) == doctest::Approx(1.0));
  }
}

TEST_CASE("empty intersection is rejected") {
  CHECK_THROWS_AS(Polyhedron::from_hrep(1, {{v1(1), -1.0}, {v1(-1), -1.0}}),
                  EmptyPolyhedron);
}

TEST_CASE("cross-polytope facets") {
  auto p = Polyhedron::from_vrep(2, {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)});
  REQUIRE(p.hrep().size() == 4);
  for (const Halfspace& h : p.hrep()) {
    CHECK(std::abs(h.normal[0]) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(h.normal[1]) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(h.offset == doctest::Approx(1.0 / std::sqrt(2.0)));
  }
}

TEST_CASE("apex with a ray: equality pair plus one facet") {
  auto p = Polyhedron::from_vrep(2, {v2(0, 0)}, {v2(1, 0)});
  CHECK(p.affine_dim() == 1);
  // x2 = 0 twice, -x1 <= 0 once
  REQUIRE(p.hrep().size() == 3);
  int equalities = 0, facets = 0;
  for (const Halfspace& h : p.hrep()) {
    if (std::abs(h.normal[1]) > 0.5) {
      ++equalities;
      CHECK(h.offset == doctest::Approx(0.0));
    } else {
      ++facets;
      CHECK(h.normal[0] == doctest::Approx(-1.0));
      CHECK(h.offset == doctest::Approx(0.0));
    }
  }
  CHECK(equalities == 2);
  CHECK(facets == 1);
}

TEST_CASE("hull of a random cloud contains its points") {
  Rng rng(20240817);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Vec> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(rng.vec(2, -2.0, 2.0));
    auto hull = Polyhedron::from_vrep(2, pts);
    CHECK(hull.hrep().size() <= 6);
    for (const Vec& q : pts) CHECK(hull.contains(q, 1e-9));
  }
}

TEST_CASE("polar of the cube is the cross-polytope") {
  auto cross = polar(box(2, 1.0));
  auto expected =
      Polyhedron::from_vrep(2, {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)});
  CHECK(approx_equal(cross, expected, 1e-9));
}

TEST_CASE("polar of a half-line") {
  // [-1, inf): {y : x*y <= 1 for all x >= -1} = [-1, 0]
  auto p = Polyhedron::from_vrep(1, {v1(-1)}, {v1(1)});
  auto q = polar(p);
  REQUIRE(q.vertices().size() == 2);
  CHECK(q.vertices().front()[0] == doctest::Approx(-1.0));
  CHECK(q.vertices().back()[0] == doctest::Approx(0.0));
}

TEST_CASE("polar of a vertical line is a horizontal line") {
  auto line = Polyhedron::from_vrep(2, {v2(0, 0)}, {}, {v2(0, 1)});
  auto q = polar(line);
  CHECK(q.affine_dim() == 1);
  REQUIRE(q.lines().size() == 1);
  CHECK(std::abs(q.lines()[0][0]) == doctest::Approx(1.0));
  CHECK(std::abs(q.lines()[0][1]) == doctest::Approx(0.0));
}

TEST_CASE("volumes") {
  CHECK(volume(box(2, 1.0)) == doctest::Approx(4.0));
  auto cross =
      Polyhedron::from_vrep(2, {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)});
  CHECK(volume(cross) == doctest::Approx(2.0));

  auto halfline = Polyhedron::from_vrep(1, {v1(0)}, {v1(1)});
  CHECK(volume(halfline) == kInf);
  auto line = Polyhedron::from_vrep(2, {v2(0, 0)}, {}, {v2(0, 1)});
  CHECK(volume(line) == 0.0);
}

TEST_CASE("random simplex volume equals the determinant formula") {
  Rng rng(77);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<Vec> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(rng.vec(3, -2.0, 2.0));
    double det_vol = simplex_volume_det(pts);
    if (det_vol < 1e-3) continue;
    CHECK(volume(Polyhedron::from_vrep(3, pts)) == doctest::Approx(det_vol));
  }
}

TEST_CASE("moments") {
  CHECK(moment(box(2, 1.0)).norm() == doctest::Approx(0.0));

  auto seg = Polyhedron::from_hrep(1, {{v1(1), 2.0}, {v1(-1), 0.0}});
  CHECK(moment(seg)[0] == doctest::Approx(2.0));

  auto tri = Polyhedron::from_vrep(2, {v2(0, 0), v2(1, 0), v2(0, 1)});
  Vec m = moment(tri);
  CHECK(m[0] == doctest::Approx(1.0 / 6.0));
  CHECK(m[1] == doctest::Approx(1.0 / 6.0));

  CHECK_THROWS_AS(moment(Polyhedron::from_vrep(1, {v1(0)}, {v1(1)})),
                  UnboundedInput);
}

TEST_CASE("directed distances") {
  auto k = Polyhedron::from_hrep(1, {{v1(1), 1.0}, {v1(-1), 0.0}});
  auto f = Polyhedron::from_hrep(1, {{v1(1), 2.0}, {v1(-1), 0.0}});
  CHECK(directed_distance(k, f) == doctest::Approx(0.0));
  CHECK(directed_distance(f, k) == doctest::Approx(1.0));

  const Polyhedron& disk = ball_model(2, 64).poly;
  auto origin = Polyhedron::from_vrep(2, {v2(0, 0)});
  CHECK(directed_distance(disk, origin) == doctest::Approx(1.0).epsilon(1e-9));

  // farthest vertex of e1 + disk from the segment {0} x [-1, 1] is (2, 0)
  auto shifted = translate(disk, v2(1, 0));
  auto segment = Polyhedron::from_vrep(2, {v2(0, -1), v2(0, 1)});
  CHECK(directed_distance(shifted, segment) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(directed_distance(disk, segment) == doctest::Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(
      directed_distance(Polyhedron::from_vrep(1, {v1(0)}, {v1(1)}), k),
      UnboundedInput);
}

TEST_CASE("inscribed ellipsoid of simple bodies") {
  auto e = john_ellipsoid(box(2, 1.0));
  CHECK(e.center.norm() < 1e-6);
  CHECK(e.shape(0, 0) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(e.shape(1, 1) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(std::abs(e.shape(0, 1)) < 1e-6);

  auto seg = Polyhedron::from_hrep(1, {{v1(1), 4.0}, {v1(-1), 2.0}});
  auto e1 = john_ellipsoid(seg);
  CHECK(e1.center[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(e1.shape(0, 0) == doctest::Approx(9.0).epsilon(1e-8));

  CHECK_THROWS_AS(
      john_ellipsoid(Polyhedron::from_vrep(2, {v2(0, 0), v2(1, 0)})),
      DegenerateBody);
}

TEST_CASE("inscribed ellipse of the right triangle matches the oracle") {
  auto tri = Polyhedron::from_vrep(2, {v2(0, 0), v2(1, 0), v2(0, 1)});
  auto e = john_ellipsoid(tri);

  // tangency through the edge midpoints pins the maximizer analytically
  CHECK(e.center[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(e.center[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(e.shape(0, 0) == doctest::Approx(1.0 / 9.0).epsilon(1e-5));
  CHECK(e.shape(0, 1) == doctest::Approx(-1.0 / 18.0).epsilon(1e-5));
  CHECK(e.log_det_shape() == doctest::Approx(-std::log(108.0)).epsilon(1e-6));

  auto oracle = inscribed_ellipse_pattern_search(tri);
  CHECK(e.log_det_shape() == doctest::Approx(oracle.logdet).epsilon(1e-4));
}

TEST_CASE("round trips between representations") {
  Rng rng(101);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int rep = 0; rep < 120; ++rep) {
      auto p = random_polytope(rng, dim, dim + 2 + rng.uniform_int(0, 4), 2.0);
      auto from_h = Polyhedron::from_hrep(dim, p.hrep());
      CHECK(approx_equal(p, from_h, 1e-8));
      auto from_v = Polyhedron::from_vrep(dim, p.vertices(), p.rays(), p.lines());
      CHECK(approx_equal(p, from_v, 1e-8));
    }
  }
}

TEST_CASE("bipolar identity on bodies containing the origin") {
  Rng rng(202);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int rep = 0; rep < 60; ++rep) {
      auto p = random_body(rng, dim, dim + 3 + rng.uniform_int(0, 3), 2.0);
      auto pp = polar(polar(p));
      CHECK(hausdorff_distance(p, pp) <= 1e-9);
    }
  }
}

TEST_CASE("polarity reverses inclusion") {
  Rng rng(303);
  for (int rep = 0; rep < 60; ++rep) {
    auto p = random_body(rng, 2, 6, 1.5);
    auto q = random_body(rng, 2, 6, 1.5);
    auto hull_pts = p.vertices();
    hull_pts.insert(hull_pts.end(), q.vertices().begin(), q.vertices().end());
    auto big = Polyhedron::from_vrep(2, hull_pts);  // p subset big
    CHECK(contains_polyhedron(polar(p), polar(big), 1e-9));
  }
}

TEST_CASE("volume positivity matches full dimensionality") {
  Rng rng(404);
  for (int rep = 0; rep < 40; ++rep) {
    auto p = random_polytope(rng, 2, 5, 2.0);
    if (p.affine_dim() == 2)
      CHECK(volume(p) > 0.0);
    else
      CHECK(volume(p) == 0.0);
  }
}

TEST_CASE("inscribed ellipsoid sandwich on random bodies") {
  Rng rng(505);
  for (int dim = 2; dim <= 3; ++dim) {
    for (int rep = 0; rep < 12; ++rep) {
      auto p = random_body(rng, dim, dim + 4, 2.0);
      auto e = john_ellipsoid(p);

      double slack = kInf;
      for (const Halfspace& h : p.hrep())
        slack = std::min(slack, h.offset - h.normal.dot(e.center) -
                                    std::sqrt(h.normal.dot(e.shape * h.normal)));
      CHECK(slack >= -john_tol());

      Mat inv = e.shape.inverse();
      double worst = 0.0;
      for (const Vec& v : p.vertices()) {
        Vec d = v - e.center;
        worst = std::max(worst, d.dot(inv * d));
      }
      CHECK(std::sqrt(worst) <= dim * (1.0 + john_tol()));
    }
  }
}

TEST_CASE("symmetric bodies obey the sqrt(d) sandwich") {
  Rng rng(606);
  for (int rep = 0; rep < 12; ++rep) {
    std::vector<Vec> pts;
    for (int i = 0; i < 5; ++i) {
      Vec v = rng.vec(2, -2.0, 2.0);
      pts.push_back(v);
      pts.push_back(-v);
    }
    auto p = Polyhedron::from_vrep(2, pts);
    if (p.affine_dim() < 2) continue;
    auto e = john_ellipsoid(p);
    CHECK(e.center.norm() < 1e-5);
    Mat inv = e.shape.inverse();
    double worst = 0.0;
    for (const Vec& v : p.vertices()) {
      Vec d = v - e.center;
      worst = std::max(worst, d.dot(inv * d));
    }
    CHECK(std::sqrt(worst) <= std::sqrt(2.0) * (1.0 + 1e-4));
  }
}

TEST_CASE("directed distance is lower semicontinuous under vertex jitter") {
  Rng rng(707);
  auto f = random_body(rng, 2, 5, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    auto k = random_polytope(rng, 2, 5, 3.0);
    double base = directed_distance(k, f);
    for (double eps : {1e-3, 1e-5, 1e-7}) {
      std::vector<Vec> pts;
      for (const Vec& v : k.vertices()) pts.push_back(v + rng.vec(2, -eps, eps));
      double perturbed = directed_distance(Polyhedron::from_vrep(2, pts), f);
      CHECK(perturbed >= base - 10.0 * eps - 1e-9);
    }
  }
}

TEST_CASE("ball models are inscribed with known inradius") {
  for (int dim = 1; dim <= 4; ++dim) {
    const BallModel& m = ball_model(dim);
    CHECK(m.inradius <= 1.0 + 1e-12);
    CHECK(m.inradius > 0.5);
    for (const Vec& v : m.poly.vertices())
      CHECK(v.norm() == doctest::Approx(1.0));
  }
  CHECK(ball_model(1).inradius == doctest::Approx(1.0));
  CHECK(ball_model(2).inradius == doctest::Approx(std::cos(M_PI / 64.0)));
}

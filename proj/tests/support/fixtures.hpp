#pragma once

#include <cvxlab/function.hpp>
#include <cvxlab/geometry.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace cvxlab::testing {

// Deterministic uniforms independent of the standard library's distribution
// implementations, so fixture streams are stable everywhere.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  double uniform(double lo, double hi) {
    double u = (engine() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Vec vec(int d, double lo, double hi) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = uniform(lo, hi);
    return v;
  }
};

inline Polyhedron random_polytope(Rng& rng, int dim, int points, double radius) {
  std::vector<Vec> pts;
  for (int i = 0; i < points; ++i) pts.push_back(rng.vec(dim, -radius, radius));
  return Polyhedron::from_vrep(dim, std::move(pts));
}

// Random polytope with 0 strictly inside.
inline Polyhedron random_body(Rng& rng, int dim, int points, double radius) {
  std::vector<Vec> pts;
  for (int i = 0; i < points; ++i) {
    Vec v = rng.vec(dim, -radius, radius);
    double n = v.norm();
    if (n < 0.3) v *= 0.3 * (1.0 + 1.0 / (n + 1e-9));
    pts.push_back(v);
  }
  for (int i = 0; i < dim; ++i) {
    pts.push_back(0.4 * unit_vec(dim, i));
    pts.push_back(-0.4 * unit_vec(dim, i));
  }
  return Polyhedron::from_vrep(dim, std::move(pts));
}

// Geometric fixture: phi(0) = 0, phi >= 0, coercive, full domain.
inline Fn random_cvx0(Rng& rng, int n, bool even, int extra_pieces = 4) {
  std::vector<AffinePiece> ps;
  ps.push_back({zero_vec(n), 0.0});
  for (int i = 0; i < n; ++i) {
    double k = rng.uniform(0.5, 2.5);
    double d = rng.uniform(0.0, 1.5);
    ps.push_back({k * unit_vec(n, i), -d});
    ps.push_back({-k * unit_vec(n, i), -d});
  }
  for (int i = 0; i < extra_pieces; ++i) {
    Vec s = rng.vec(n, -2.0, 2.0);
    double c = rng.uniform(-2.0, 0.0);
    ps.push_back({s, c});
    if (even) ps.push_back({-s, c});
  }
  return Fn::make(n, std::move(ps));
}

// Closed proper convex fixture, sometimes with a bounded box domain and a
// vertical offset, for conjugation round trips.
inline Fn random_proper(Rng& rng, int n) {
  std::vector<AffinePiece> ps;
  int count = rng.uniform_int(2, 6);
  for (int i = 0; i < count; ++i)
    ps.push_back({rng.vec(n, -2.0, 2.0), rng.uniform(-2.0, 2.0)});
  std::optional<Polyhedron> dom;
  if (rng.uniform(0.0, 1.0) < 0.5) {
    dom = translate(box(n, rng.uniform(0.5, 3.0)), rng.vec(n, -0.5, 0.5));
  } else {
    // make it coercive so the conjugate has full-dimensional domain
    for (int i = 0; i < n; ++i) {
      double k = rng.uniform(1.0, 3.0);
      ps.push_back({k * unit_vec(n, i), rng.uniform(-1.0, 1.0)});
      ps.push_back({-k * unit_vec(n, i), rng.uniform(-1.0, 1.0)});
    }
  }
  return Fn::make(n, std::move(ps), dom);
}

// Even geometric fixture with infinite mass: flat along a random direction.
inline Fn random_even_infinite(Rng& rng, int n) {
  if (n == 1) {
    return Fn::make(1, {{zero_vec(1), 0.0}});  // identically zero
  }
  Vec u = rng.vec(n, -1.0, 1.0);
  if (u.norm() < 0.3) u = unit_vec(n, 0);
  u.normalize();
  double gap = rng.uniform(0.2, 1.5);
  std::vector<AffinePiece> ps;
  ps.push_back({zero_vec(n), 0.0});
  ps.push_back({u, -gap});
  ps.push_back({-u, -gap});
  return Fn::make(n, std::move(ps));
}

inline Mat random_gl(Rng& rng, int n) {
  for (;;) {
    Mat t(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = rng.uniform(-1.5, 1.5);
    double det = std::abs(t.determinant());
    if (det >= 0.1 && det <= 10.0) return t;
  }
}

}  // namespace cvxlab::testing

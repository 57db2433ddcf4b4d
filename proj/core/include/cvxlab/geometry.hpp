#pragma once

#include <cvxlab/errors.hpp>
#include <cvxlab/linalg.hpp>

#include <optional>
#include <vector>

namespace cvxlab {

// {x : <normal, x> <= offset}; normal is kept at unit euclidean length.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

// {x : (x - center)^T shape^{-1} (x - center) <= 1}, shape symmetric positive
// definite.
struct Ellipsoid {
  Vec center;
  Mat shape;
  double log_det_shape() const;
};

// Convex polyhedron in R^d, d <= 4, with canonical halfspace and generator
// descriptions kept in sync. Lines of the recession cone are stored once in
// lines(); rays() holds the pointed extreme rays, unit length and canonical
// modulo the line space. Values are immutable after construction and safe to
// share across threads.
class Polyhedron {
 public:
  // Throws EmptyPolyhedron when the intersection is empty. An empty halfspace
  // list yields all of R^d.
  static Polyhedron from_hrep(int dim, std::vector<Halfspace> halfspaces);

  // conv(vertices) + cone(rays); lines may be passed as opposite ray pairs or
  // via the explicit list. At least one vertex is required.
  static Polyhedron from_vrep(int dim, std::vector<Vec> vertices,
                              std::vector<Vec> rays = {},
                              std::vector<Vec> lines = {});

  int dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }

  const std::vector<Halfspace>& hrep() const { return hrep_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& lines() const { return lines_; }

  bool bounded() const { return rays_.empty() && lines_.empty(); }
  bool full_dimensional() const { return affine_dim_ == dim_; }

  bool contains(const Vec& x, double tol) const;
  // Membership of a direction in the recession cone.
  bool recession_contains(const Vec& dir, double tol) const;
  // Support value sup{<a, x> : x in P}; +inf when unbounded in direction a.
  double support(const Vec& a) const;

  // Pointed rays plus both signs of every line.
  std::vector<Vec> ray_directions() const;

 private:
  Polyhedron() = default;
  int dim_ = 0;
  int affine_dim_ = 0;
  std::vector<Halfspace> hrep_;
  std::vector<Vec> vertices_;
  std::vector<Vec> rays_;
  std::vector<Vec> lines_;  // orthonormal basis of the lineality space
};

// ---- elementary constructions -------------------------------------------

Polyhedron box(int dim, double radius);
Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);
Polyhedron translate(const Polyhedron& p, const Vec& shift);
Polyhedron scale(const Polyhedron& p, double factor);
// Image under an invertible linear map.
Polyhedron linear_image(const Polyhedron& p, const Mat& t);

// ---- operations ----------------------------------------------------------

// {y : <v,y> <= 1 for all vertices, <r,y> <= 0 for all rays/lines}.
Polyhedron polar(const Polyhedron& p);

// Exact volume by simplicial decomposition. +inf when rays are present and
// the set is full-dimensional, 0 when affine_dim < dim.
double volume(const Polyhedron& p);

// Integral of x over p (exact, per simplex). Throws UnboundedInput.
Vec moment(const Polyhedron& p);

// Euclidean distance from a point to the polyhedron (0 inside).
double distance_to(const Polyhedron& p, const Vec& x);

// max over vertices of k of the distance to f; throws UnboundedInput when k
// is unbounded.
double directed_distance(const Polyhedron& k, const Polyhedron& f);

// Symmetric Hausdorff distance of two bounded polyhedra.
double hausdorff_distance(const Polyhedron& p, const Polyhedron& q);

// Maximum-volume inscribed ellipsoid. Requires a bounded full-dimensional
// body (DegenerateBody otherwise). The result satisfies
// center + E subset p subset center + dim*E up to john_tol().
Ellipsoid john_ellipsoid(const Polyhedron& p);

// Structural equality of canonical representations within tol: generator
// sets match pairwise, line spaces agree, facet sets match.
bool approx_equal(const Polyhedron& p, const Polyhedron& q, double tol);

// Containment p subset q within tol, via generators against halfspaces.
bool contains_polyhedron(const Polyhedron& q, const Polyhedron& p, double tol);

// Signed containment margin min over halfspaces of q of the slack of the
// support of p; negative when p pokes out of q. Requires p bounded.
double containment_margin(const Polyhedron& q, const Polyhedron& p);

// ---- polyhedral unit-ball model -------------------------------------------

// Deterministic inscribed polytope model of the euclidean unit ball with
// about `generators` vertex directions (exact in 1D, regular polygon in 2D,
// antipodally symmetric direction hulls in 3D/4D).
struct BallModel {
  Polyhedron poly;
  double inradius;  // min facet offset; poly lies between inradius*B and B
};
const BallModel& ball_model(int dim, int generators = 64);

}  // namespace cvxlab

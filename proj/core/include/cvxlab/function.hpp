#pragma once

#include <cvxlab/geometry.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cvxlab {

// One supporting plane x -> <slope, x> + intercept.
struct AffinePiece {
  Vec slope;
  double intercept = 0.0;
};

enum class MassKind { kFinite, kInfinite, kZero };

struct PositionCertificate {
  bool member = false;
  double inner_margin = -kInf;  // slack of the inner ball containment
  double outer_margin = -kInf;  // slack of the outer ball containment
  double witness_t = 0.0;       // center offset along e1 (S1/S2 style classes)
};

struct ClassTags {
  bool is_cvx0 = false;         // phi >= 0 and phi(0) = 0
  bool is_even = false;
  bool zero_in_int_dom = false;
  MassKind integrable = MassKind::kZero;
  PositionCertificate in_Se;    // B/sqrt(n) subset G(1) subset B
  PositionCertificate in_S1;    // t*e1 + B subset G(1) subset 2nB, t in [0,n]
  PositionCertificate in_S2;    // same at G(2n) plus inf=0, 0<=phi(0)<=n
};

// Closed proper convex function on R^n given as the max of affine pieces over
// a polyhedral effective domain (+inf outside). The epigraph in R^{n+1} is the
// canonical carrier: pieces and domain are re-derived from its facets, so two
// functions are equal iff their epigraphs are. Immutable after construction.
class PolyhedralConvexFunction {
 public:
  // Builds and canonicalizes. Throws EmptyPolyhedron when the domain is empty.
  static PolyhedralConvexFunction make(int n, std::vector<AffinePiece> pieces,
                                       std::optional<Polyhedron> domain = {});

  // From an epigraph polyhedron in R^{n+1}. The set must be closed under
  // t -> +inf and have a lower boundary (ImproperInput otherwise).
  static PolyhedralConvexFunction from_epigraph(const Polyhedron& epi);

  int ambient_dim() const { return n_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const Polyhedron& domain() const { return domain_; }
  const Polyhedron& epigraph() const { return epigraph_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // +inf outside the domain, else the max over pieces.
  double evaluate(const Vec& x) const;

  // {x in dom : phi(x) <= s}; EmptyLevelSet when s < inf phi.
  Polyhedron level_set(double s) const;

  // Attained for every function with bounded-below epigraph; -inf otherwise.
  double inf_value() const;

  bool is_even() const;

 private:
  int n_ = 0;
  std::vector<AffinePiece> pieces_;
  Polyhedron domain_;
  Polyhedron epigraph_;
  std::string name_;
  PolyhedralConvexFunction(int n, Polyhedron domain, Polyhedron epi);
};

using Fn = PolyhedralConvexFunction;

// Structural equality through canonical epigraphs.
bool approx_equal(const Fn& f, const Fn& g, double tol);

// phi(T^{-1} y): level sets and domain transform by T.
Fn linear_image(const Fn& f, const Mat& t);

// phi + c.
Fn vertical_shift(const Fn& f, double c);

enum class CombineOp { kMin, kMax };

// Pointwise min / max. Min takes the convex hull of the epigraph union and
// raises NonConvexMin when that hull strictly exceeds the union (checked by
// inclusion-exclusion volumes inside a bounding box around the generators).
Fn combine(const Fn& f, const Fn& g, CombineOp op);

// phi >= 0 everywhere with phi(0) = 0.
bool is_geometric(const Fn& f);

// Exhaustive class predicates; every flag is recomputed from the function.
ClassTags classify(const Fn& f);

// Coarse integrability trichotomy used by classify (no quadrature).
MassKind integrability(const Fn& f);

// ---- reference builders ----------------------------------------------------

// Supporting-plane approximation of q|x|^2/2 with `pieces` tangency points on
// a centered uniform grid of [-radius, radius]^n (grid per axis in n >= 2;
// odd per-axis counts include the origin so the result stays geometric).
Fn approximate_quadratic(int n, double q, int pieces, double radius);

// Supporting-plane approximation of the euclidean norm with `pieces` tangent
// directions.
Fn approximate_norm(int n, int pieces);

// Max-affine function from explicit (point, value, slope) support data.
struct SupportSample {
  Vec point;
  double value;
  Vec slope;
};
Fn approximate_table(int n, const std::vector<SupportSample>& samples);

// Gauge (Minkowski functional) of a polytope with 0 in its interior.
Fn gauge_of(const Polyhedron& k);

// Indicator: 0 on k, +inf outside.
Fn indicator_of(const Polyhedron& k);

}  // namespace cvxlab

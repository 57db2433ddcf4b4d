#include <cvxlab/transforms.hpp>
#include <cvxlab/tolerances.hpp>

namespace cvxlab {

Polyhedron reflect(const Polyhedron& p) {
  Mat t = Mat::Identity(p.dim(), p.dim());
  t(p.dim() - 1, p.dim() - 1) = -1.0;
  return linear_image(p, t);
}

Fn legendre(const Fn& f) {
  const double tol = geom_tol();
  const int n = f.ambient_dim();
  const Polyhedron& epi = f.epigraph();

  // sup over the epigraph of <x,y> - t: finite iff y is nonincreasing along
  // every recession direction, attained at a generator point.
  std::vector<AffinePiece> pieces;
  for (const Vec& v : epi.vertices()) pieces.push_back({v.head(n), -v[n]});

  std::vector<Halfspace> dom;
  for (const Vec& r : epi.ray_directions()) {
    Vec a = r.head(n);
    double norm = a.norm();
    if (norm <= tol) continue;  // the vertical direction: no constraint
    dom.push_back({a / norm, r[n] / norm});
  }
  return Fn::make(n, std::move(pieces), Polyhedron::from_hrep(n, std::move(dom)));
}

Fn polarity(const Fn& f) {
  if (!is_geometric(f)) throw NotGeometric();
  return Fn::from_epigraph(reflect(polar(f.epigraph())));
}

Fn gauge(const Fn& f) { return legendre(polarity(f)); }

Fn apply(TransformTag tag, const Fn& f) {
  switch (tag) {
    case TransformTag::kLegendre:
      return legendre(f);
    case TransformTag::kPolarity:
      return polarity(f);
    case TransformTag::kGauge:
      return gauge(f);
  }
  throw std::logic_error("unreachable");
}

}  // namespace cvxlab

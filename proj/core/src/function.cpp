#include <cvxlab/function.hpp>
#include <cvxlab/tolerances.hpp>

#include <algorithm>
#include <cmath>

namespace cvxlab {
namespace {

// Epigraph H-rep rows of max(pieces) restricted to dom.
std::vector<Halfspace> epigraph_rows(int n, const std::vector<AffinePiece>& pieces,
                                     const Polyhedron* dom) {
  std::vector<Halfspace> hs;
  for (const AffinePiece& p : pieces) {
    Vec a(n + 1);
    a.head(n) = p.slope;
    a[n] = -1.0;
    hs.push_back({a, -p.intercept});
  }
  if (dom) {
    for (const Halfspace& h : dom->hrep()) {
      Vec a = zero_vec(n + 1);
      a.head(n) = h.normal;
      hs.push_back({a, h.offset});
    }
  }
  return hs;
}

}  // namespace

PolyhedralConvexFunction::PolyhedralConvexFunction(int n, Polyhedron domain,
                                                   Polyhedron epi)
    : n_(n), domain_(std::move(domain)), epigraph_(std::move(epi)) {
  const double tol = geom_tol();
  for (const Halfspace& h : epigraph_.hrep()) {
    double at = h.normal[n_];
    if (at < -tol) {
      double s = -at;
      AffinePiece p;
      p.slope = h.normal.head(n_) / s;
      p.intercept = -h.offset / s;
      pieces_.push_back(std::move(p));
    }
  }
  if (pieces_.empty()) throw ImproperInput("epigraph has no lower boundary");
}

PolyhedralConvexFunction PolyhedralConvexFunction::from_epigraph(
    const Polyhedron& epi) {
  const double tol = geom_tol();
  const int n = epi.dim() - 1;
  if (n < 1) throw UnsupportedDimension();
  if (!epi.recession_contains(unit_vec(n + 1, n), tol))
    throw ImproperInput("not closed under t -> +inf");
  // A vertical downward direction would mean the value -inf somewhere.
  for (const Vec& r : epi.ray_directions())
    if (r[n] < -tol && r.head(n).norm() <= tol)
      throw ImproperInput("epigraph contains a vertical line");

  std::vector<Halfspace> dom_rows;
  for (const Halfspace& h : epi.hrep()) {
    if (std::abs(h.normal[n]) <= tol) {
      Vec a = h.normal.head(n);
      double s = a.norm();
      if (s > tol) dom_rows.push_back({a / s, h.offset / s});
    }
  }
  Polyhedron dom = Polyhedron::from_hrep(n, std::move(dom_rows));
  return PolyhedralConvexFunction(n, std::move(dom), epi);
}

PolyhedralConvexFunction PolyhedralConvexFunction::make(
    int n, std::vector<AffinePiece> pieces, std::optional<Polyhedron> domain) {
  if (pieces.empty()) throw ImproperInput("a function needs at least one piece");
  if (domain && domain->dim() != n) throw DimensionMismatch();
  Polyhedron epi = Polyhedron::from_hrep(
      n + 1, epigraph_rows(n, pieces, domain ? &*domain : nullptr));
  return from_epigraph(epi);
}

double PolyhedralConvexFunction::evaluate(const Vec& x) const {
  if (!domain_.contains(x, geom_tol())) return kInf;
  double best = -kInf;
  for (const AffinePiece& p : pieces_)
    best = std::max(best, p.slope.dot(x) + p.intercept);
  return best;
}

Polyhedron PolyhedralConvexFunction::level_set(double s) const {
  std::vector<Halfspace> hs = domain_.hrep();
  for (const AffinePiece& p : pieces_) {
    double n = p.slope.norm();
    if (n <= geom_tol()) {
      if (p.intercept > s + geom_tol()) throw EmptyLevelSet();
      continue;
    }
    hs.push_back({p.slope / n, (s - p.intercept) / n});
  }
  try {
    return Polyhedron::from_hrep(n_, std::move(hs));
  } catch (const EmptyPolyhedron&) {
    throw EmptyLevelSet();
  }
}

double PolyhedralConvexFunction::inf_value() const {
  const double tol = geom_tol();
  for (const Vec& r : epigraph_.ray_directions())
    if (r[n_] < -tol) return -kInf;
  double best = kInf;
  for (const Vec& v : epigraph_.vertices()) best = std::min(best, v[n_]);
  return best;
}

bool PolyhedralConvexFunction::is_even() const {
  Mat t = Mat::Identity(n_ + 1, n_ + 1);
  t.topLeftCorner(n_, n_) *= -1.0;
  return approx_equal(epigraph_, linear_image(epigraph_, t), geom_tol());
}

bool approx_equal(const Fn& f, const Fn& g, double tol) {
  return f.ambient_dim() == g.ambient_dim() &&
         approx_equal(f.epigraph(), g.epigraph(), tol);
}

Fn linear_image(const Fn& f, const Mat& t) {
  const int n = f.ambient_dim();
  Mat lift = Mat::Identity(n + 1, n + 1);
  lift.topLeftCorner(n, n) = t;
  return Fn::from_epigraph(linear_image(f.epigraph(), lift));
}

Fn vertical_shift(const Fn& f, double c) {
  Vec shift = zero_vec(f.ambient_dim() + 1);
  shift[f.ambient_dim()] = c;
  return Fn::from_epigraph(translate(f.epigraph(), shift));
}

namespace {

double clipped_volume(const Polyhedron& p, const Polyhedron& clip_box) {
  try {
    return volume(intersect(p, clip_box));
  } catch (const EmptyPolyhedron&) {
    return 0.0;
  }
}

// Orthonormal chart of the affine hull: base point plus direction basis.
struct AffineChart {
  Vec origin;
  std::vector<Vec> basis;
};

AffineChart affine_chart(const Polyhedron& p) {
  AffineChart c;
  c.origin = p.vertices().front();
  std::vector<Vec> dirs;
  for (size_t i = 1; i < p.vertices().size(); ++i)
    dirs.push_back(p.vertices()[i] - c.origin);
  dirs.insert(dirs.end(), p.rays().begin(), p.rays().end());
  dirs.insert(dirs.end(), p.lines().begin(), p.lines().end());
  for (Vec v : dirs) {
    for (const Vec& u : c.basis) v -= u.dot(v) * u;
    double n = v.norm();
    if (n > 1e-9) c.basis.push_back(v / n);
  }
  return c;
}

Polyhedron to_chart(const Polyhedron& p, const AffineChart& c) {
  const int k = static_cast<int>(c.basis.size());
  auto map = [&](const Vec& x, bool is_point) {
    Vec y(k);
    Vec rel = is_point ? Vec(x - c.origin) : x;
    for (int i = 0; i < k; ++i) y[i] = c.basis[i].dot(rel);
    return y;
  };
  std::vector<Vec> vs, rs, ls;
  for (const Vec& v : p.vertices()) vs.push_back(map(v, true));
  for (const Vec& r : p.rays()) rs.push_back(map(r, false));
  for (const Vec& l : p.lines()) ls.push_back(map(l, false));
  return Polyhedron::from_vrep(k, std::move(vs), std::move(rs), std::move(ls));
}

}  // namespace

Fn combine(const Fn& f, const Fn& g, CombineOp op) {
  if (f.ambient_dim() != g.ambient_dim()) throw DimensionMismatch();
  const int n = f.ambient_dim();

  if (op == CombineOp::kMax) {
    std::vector<AffinePiece> pieces = f.pieces();
    pieces.insert(pieces.end(), g.pieces().begin(), g.pieces().end());
    return Fn::make(n, std::move(pieces), intersect(f.domain(), g.domain()));
  }

  // Pointwise min: hull of the epigraph union, then verify the hull added
  // nothing. Volumes are compared inside a box that comfortably covers every
  // generator; recession mismatches beyond that scale are not detectable at
  // finite precision and are the caller's contract.
  std::vector<Vec> vs = f.epigraph().vertices();
  vs.insert(vs.end(), g.epigraph().vertices().begin(), g.epigraph().vertices().end());
  std::vector<Vec> rs = f.epigraph().rays();
  rs.insert(rs.end(), g.epigraph().rays().begin(), g.epigraph().rays().end());
  std::vector<Vec> ls = f.epigraph().lines();
  ls.insert(ls.end(), g.epigraph().lines().begin(), g.epigraph().lines().end());
  Polyhedron hull = Polyhedron::from_vrep(n + 1, vs, rs, ls);

  double radius = 1.0;
  for (const Vec& v : vs) radius = std::max(radius, v.lpNorm<Eigen::Infinity>());

  Polyhedron ef = f.epigraph(), eg = g.epigraph(), h = hull;
  if (hull.affine_dim() < n + 1) {
    // Everything lives inside the hull's affine hull; compare there.
    AffineChart chart = affine_chart(hull);
    ef = to_chart(ef, chart);
    eg = to_chart(eg, chart);
    h = to_chart(h, chart);
  }
  Polyhedron clip = box(h.dim(), 4.0 * radius + 4.0);
  double vol_hull = clipped_volume(h, clip);
  double vol_f = clipped_volume(ef, clip);
  double vol_g = clipped_volume(eg, clip);
  double vol_both = 0.0;
  try {
    vol_both = clipped_volume(intersect(ef, eg), clip);
  } catch (const EmptyPolyhedron&) {
  }
  double union_vol = vol_f + vol_g - vol_both;
  if (vol_hull > union_vol + 1e-7 * std::max(1.0, vol_hull))
    throw NonConvexMin();
  return Fn::from_epigraph(hull);
}

MassKind integrability(const Fn& f) {
  const double tol = geom_tol();
  const int n = f.ambient_dim();
  if (f.domain().affine_dim() < n) return MassKind::kZero;
  for (const Vec& r : f.epigraph().ray_directions()) {
    if (std::abs(r[n]) <= tol && r.head(n).norm() > tol) return MassKind::kInfinite;
    if (r[n] < -tol) return MassKind::kInfinite;  // unbounded below
  }
  return MassKind::kFinite;
}

namespace {

PositionCertificate sandwich_certificate(const Polyhedron& level, int n,
                                         double inner_scale, double outer_scale,
                                         bool slide_center) {
  PositionCertificate cert;
  if (!level.bounded() || level.affine_dim() < n) return cert;
  const BallModel& model = ball_model(n);
  const double tol = geom_tol();

  Polyhedron outer = scale(model.poly, outer_scale);
  cert.outer_margin = containment_margin(outer, level);

  // inner margin as a function of the slide t along e1 is a min of affine
  // functions of t, hence concave; golden-section localizes its maximum.
  auto inner_margin_at = [&](double t) {
    double margin = kInf;
    for (const Halfspace& h : level.hrep()) {
      double support = inner_scale * model.poly.support(h.normal);
      margin = std::min(margin, h.offset - t * h.normal[0] - support);
    }
    return margin;
  };

  if (!slide_center) {
    cert.inner_margin = inner_margin_at(0.0);
    cert.witness_t = 0.0;
  } else {
    double lo = 0.0, hi = static_cast<double>(n);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
    double fa = inner_margin_at(a), fb = inner_margin_at(b);
    for (int i = 0; i < 200; ++i) {
      if (fa < fb) {
        lo = a;
        a = b;
        fa = fb;
        b = lo + gr * (hi - lo);
        fb = inner_margin_at(b);
      } else {
        hi = b;
        b = a;
        fb = fa;
        a = hi - gr * (hi - lo);
        fa = inner_margin_at(a);
      }
    }
    double t = 0.5 * (lo + hi);
    double mid = inner_margin_at(t);
    double at0 = inner_margin_at(0.0);
    if (at0 >= mid) {  // prefer the centered witness on ties
      t = 0.0;
      mid = at0;
    }
    cert.inner_margin = mid;
    cert.witness_t = t;
  }
  cert.member = cert.inner_margin >= -tol && cert.outer_margin >= -tol;
  return cert;
}

}  // namespace

bool is_geometric(const Fn& f) {
  const double tol = geom_tol();
  double at0 = f.evaluate(zero_vec(f.ambient_dim()));
  return std::isfinite(at0) && std::abs(at0) <= tol && f.inf_value() >= -tol;
}

ClassTags classify(const Fn& f) {
  const double tol = geom_tol();
  const int n = f.ambient_dim();
  ClassTags tags;

  double at0 = f.evaluate(zero_vec(n));
  double inf = f.inf_value();
  tags.is_cvx0 = std::isfinite(at0) && std::abs(at0) <= tol && inf >= -tol;
  tags.is_even = f.is_even();

  tags.zero_in_int_dom = f.domain().affine_dim() == n;
  if (tags.zero_in_int_dom) {
    for (const Halfspace& h : f.domain().hrep()) {
      if (h.offset < tol) {
        tags.zero_in_int_dom = false;
        break;
      }
    }
  }

  tags.integrable = integrability(f);

  auto level_or_null = [&](double s) -> std::optional<Polyhedron> {
    try {
      return f.level_set(s);
    } catch (const EmptyLevelSet&) {
      return std::nullopt;
    }
  };

  if (tags.is_cvx0) {
    if (auto g1 = level_or_null(1.0)) {
      tags.in_Se = sandwich_certificate(*g1, n, 1.0 / std::sqrt(double(n)), 1.0,
                                        /*slide_center=*/false);
      tags.in_Se.member = tags.in_Se.member && tags.is_even;
      tags.in_S1 = sandwich_certificate(*g1, n, 1.0, 2.0 * n,
                                        /*slide_center=*/true);
    }
  }
  if (std::isfinite(inf) && std::abs(inf) <= tol && std::isfinite(at0) &&
      at0 >= -tol && at0 <= n + tol) {
    if (auto g2 = level_or_null(2.0 * n)) {
      tags.in_S2 = sandwich_certificate(*g2, n, 1.0, 2.0 * n,
                                        /*slide_center=*/true);
    }
  }
  return tags;
}

// ---- reference builders ----------------------------------------------------

Fn approximate_quadratic(int n, double q, int pieces, double radius) {
  if (pieces < 2) throw ImproperInput("need at least two tangency points");
  int per_axis = pieces;
  if (n == 2) per_axis = std::max(2, static_cast<int>(std::sqrt(double(pieces))));
  if (n == 3) per_axis = std::max(2, static_cast<int>(std::cbrt(double(pieces))));

  std::vector<double> grid(per_axis);
  for (int i = 0; i < per_axis; ++i)
    grid[i] = -radius + 2.0 * radius * i / (per_axis - 1);

  std::vector<AffinePiece> ps;
  std::vector<int> idx(n, 0);
  for (;;) {
    Vec a(n);
    for (int i = 0; i < n; ++i) a[i] = grid[idx[i]];
    ps.push_back({q * a, -0.5 * q * a.squaredNorm()});
    int i = 0;
    while (i < n && ++idx[i] == per_axis) idx[i++] = 0;
    if (i == n) break;
  }
  Fn f = Fn::make(n, std::move(ps));
  f.set_name("quadratic_tangents");
  return f;
}

Fn approximate_norm(int n, int pieces) {
  std::vector<AffinePiece> ps;
  for (const Vec& u : ball_model(n, pieces).poly.vertices()) ps.push_back({u, 0.0});
  Fn f = Fn::make(n, std::move(ps));
  f.set_name("norm_tangents");
  return f;
}

Fn approximate_table(int n, const std::vector<SupportSample>& samples) {
  std::vector<AffinePiece> ps;
  for (const SupportSample& s : samples)
    ps.push_back({s.slope, s.value - s.slope.dot(s.point)});
  return Fn::make(n, std::move(ps));
}

Fn gauge_of(const Polyhedron& k) {
  std::vector<AffinePiece> ps;
  for (const Halfspace& h : k.hrep()) {
    if (h.offset <= geom_tol())
      throw IllPositioned("gauge needs 0 in the interior");
    ps.push_back({h.normal / h.offset, 0.0});
  }
  return Fn::make(k.dim(), std::move(ps));
}

Fn indicator_of(const Polyhedron& k) {
  std::vector<AffinePiece> ps{{zero_vec(k.dim()), 0.0}};
  return Fn::make(k.dim(), std::move(ps), k);
}

}  // namespace cvxlab

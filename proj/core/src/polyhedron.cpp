#include <cvxlab/geometry.hpp>
#include <cvxlab/tolerances.hpp>

#include "cone.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cassert>
#include <cmath>

namespace cvxlab {
namespace {

double incidence_scale(const Vec& x) {
  return 1.0 + x.lpNorm<Eigen::Infinity>();
}

void sort_halfspaces(std::vector<Halfspace>& hs) {
  std::sort(hs.begin(), hs.end(), [](const Halfspace& a, const Halfspace& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
  });
}

std::vector<Vec> dedup_sorted(std::vector<Vec> vs, double tol) {
  lex_sort(vs);
  std::vector<Vec> out;
  for (const Vec& v : vs)
    if (out.empty() || !approx_vec(out.back(), v, tol)) out.push_back(v);
  return out;
}

int rank_of_span(const std::vector<Vec>& dirs, int dim, double tol) {
  if (dirs.empty()) return 0;
  Eigen::MatrixXd m(dirs.size(), dim);
  for (size_t i = 0; i < dirs.size(); ++i) m.row(i) = dirs[i].transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(tol);
  return static_cast<int>(lu.rank());
}

}  // namespace

double Ellipsoid::log_det_shape() const {
  Eigen::LLT<Mat> llt(shape);
  double s = 0.0;
  for (int i = 0; i < shape.rows(); ++i) s += std::log(llt.matrixL()(i, i));
  return 2.0 * s;
}

// Canonical facet list of conv(vertices)+cone(rays)+span(lines) via the dual
// cone: a halfspace <a,x> <= b is valid iff (a, -b) lies in the polar of the
// homogenization, so its extreme rays are exactly the facets.
static std::vector<Halfspace> facets_from_generators(
    int dim, const std::vector<Vec>& vertices, const std::vector<Vec>& rays,
    const std::vector<Vec>& lines, std::vector<Vec>* equal_normals) {
  const double tol = geom_tol();
  std::vector<Vec> rows;
  rows.reserve(vertices.size() + rays.size() + 2 * lines.size());
  for (const Vec& v : vertices) {
    Vec r(dim + 1);
    r.head(dim) = v;
    r[dim] = 1.0;
    rows.push_back(r);
  }
  auto push_dir = [&](const Vec& d, double sign) {
    Vec r(dim + 1);
    r.head(dim) = sign * d;
    r[dim] = 0.0;
    rows.push_back(r);
  };
  for (const Vec& r : rays) push_dir(r, 1.0);
  for (const Vec& l : lines) {
    push_dir(l, 1.0);
    push_dir(l, -1.0);
  }

  detail::ConeGenerators dual = detail::cone_generators(std::move(rows), dim + 1);

  std::vector<Halfspace> hs;
  for (const Vec& g : dual.rays) {
    Vec a = g.head(dim);
    double c = g[dim];
    double n = a.norm();
    if (n <= tol) continue;  // the trivial 0 <= 1 ray
    hs.push_back({a / n, -c / n});
  }
  for (const Vec& g : dual.lines) {
    Vec a = g.head(dim);
    double c = g[dim];
    double n = a.norm();
    if (n <= tol) continue;
    hs.push_back({a / n, -c / n});
    hs.push_back({-a / n, c / n});
    if (equal_normals) equal_normals->push_back(a / n);
  }
  sort_halfspaces(hs);
  return hs;
}

Polyhedron Polyhedron::from_hrep(int dim, std::vector<Halfspace> halfspaces) {
  if (dim < 1 || dim > 4) throw UnsupportedDimension("dim must be 1..4");
  const double tol = geom_tol();

  std::vector<Vec> rows;
  rows.reserve(halfspaces.size() + 1);
  for (const Halfspace& h : halfspaces) {
    double n = h.normal.norm();
    if (n <= tol) {
      if (h.offset < -tol) throw EmptyPolyhedron("0 <= negative offset");
      continue;
    }
    Vec r(dim + 1);
    r.head(dim) = h.normal / n;
    r[dim] = -h.offset / n;
    rows.push_back(r);
  }
  {
    Vec r = zero_vec(dim + 1);
    r[dim] = -1.0;  // homogenization coordinate stays nonnegative
    rows.push_back(r);
  }

  detail::ConeGenerators gens = detail::cone_generators(std::move(rows), dim + 1);

  Polyhedron p;
  p.dim_ = dim;
  for (const Vec& l : gens.lines) {
    assert(std::abs(l[dim]) <= 1e-7);
    Vec d = l.head(dim);
    double n = d.norm();
    if (n > tol) p.lines_.push_back(d / n);
  }
  for (const Vec& g : gens.rays) {
    double t = g[dim];
    if (t > tol) {
      p.vertices_.push_back(g.head(dim) / t);
    } else {
      Vec d = g.head(dim);
      double n = d.norm();
      if (n > tol) p.rays_.push_back(d / n);
    }
  }
  if (p.vertices_.empty()) throw EmptyPolyhedron();

  p.vertices_ = dedup_sorted(std::move(p.vertices_), tol);
  p.rays_ = dedup_sorted(std::move(p.rays_), tol);
  lex_sort(p.lines_);

  p.hrep_ = facets_from_generators(dim, p.vertices_, p.rays_, p.lines_, nullptr);

  std::vector<Vec> dirs;
  for (size_t i = 1; i < p.vertices_.size(); ++i)
    dirs.push_back(p.vertices_[i] - p.vertices_[0]);
  dirs.insert(dirs.end(), p.rays_.begin(), p.rays_.end());
  dirs.insert(dirs.end(), p.lines_.begin(), p.lines_.end());
  p.affine_dim_ = rank_of_span(dirs, dim, 1e-7);
  return p;
}

Polyhedron Polyhedron::from_vrep(int dim, std::vector<Vec> vertices,
                                 std::vector<Vec> rays, std::vector<Vec> lines) {
  if (dim < 1 || dim > 4) throw UnsupportedDimension("dim must be 1..4");
  if (vertices.empty()) throw EmptyPolyhedron("vertex list is empty");
  const double tol = geom_tol();

  std::vector<Vec> rdirs;
  for (const Vec& r : rays) {
    double n = r.norm();
    if (n > tol) rdirs.push_back(r / n);
  }
  std::vector<Halfspace> hs =
      facets_from_generators(dim, vertices, rdirs, lines, nullptr);
  return from_hrep(dim, std::move(hs));
}

bool Polyhedron::contains(const Vec& x, double tol) const {
  double scale = incidence_scale(x);
  for (const Halfspace& h : hrep_)
    if (h.normal.dot(x) - h.offset > tol * scale) return false;
  return true;
}

bool Polyhedron::recession_contains(const Vec& dir, double tol) const {
  for (const Halfspace& h : hrep_)
    if (h.normal.dot(dir) > tol) return false;
  return true;
}

double Polyhedron::support(const Vec& a) const {
  const double tol = geom_tol();
  for (const Vec& r : rays_)
    if (a.dot(r) > tol) return kInf;
  for (const Vec& l : lines_)
    if (std::abs(a.dot(l)) > tol) return kInf;
  double best = -kInf;
  for (const Vec& v : vertices_) best = std::max(best, a.dot(v));
  return best;
}

std::vector<Vec> Polyhedron::ray_directions() const {
  std::vector<Vec> out = rays_;
  for (const Vec& l : lines_) {
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

// ---- constructions ---------------------------------------------------------

Polyhedron box(int dim, double radius) {
  std::vector<Halfspace> hs;
  for (int i = 0; i < dim; ++i) {
    hs.push_back({unit_vec(dim, i), radius});
    hs.push_back({-unit_vec(dim, i), radius});
  }
  return Polyhedron::from_hrep(dim, std::move(hs));
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch();
  std::vector<Halfspace> hs = p.hrep();
  hs.insert(hs.end(), q.hrep().begin(), q.hrep().end());
  return Polyhedron::from_hrep(p.dim(), std::move(hs));
}

Polyhedron translate(const Polyhedron& p, const Vec& shift) {
  std::vector<Vec> vs;
  vs.reserve(p.vertices().size());
  for (const Vec& v : p.vertices()) vs.push_back(v + shift);
  return Polyhedron::from_vrep(p.dim(), std::move(vs), p.rays(), p.lines());
}

Polyhedron scale(const Polyhedron& p, double factor) {
  assert(factor > 0);
  std::vector<Vec> vs;
  vs.reserve(p.vertices().size());
  for (const Vec& v : p.vertices()) vs.push_back(factor * v);
  return Polyhedron::from_vrep(p.dim(), std::move(vs), p.rays(), p.lines());
}

Polyhedron linear_image(const Polyhedron& p, const Mat& t) {
  std::vector<Vec> vs, rs, ls;
  for (const Vec& v : p.vertices()) vs.push_back(t * v);
  for (const Vec& r : p.rays()) rs.push_back(t * r);
  for (const Vec& l : p.lines()) ls.push_back(t * l);
  return Polyhedron::from_vrep(p.dim(), std::move(vs), std::move(rs),
                               std::move(ls));
}

// ---- polarity --------------------------------------------------------------

Polyhedron polar(const Polyhedron& p) {
  const double tol = geom_tol();
  std::vector<Halfspace> hs;
  for (const Vec& v : p.vertices()) {
    double n = v.norm();
    if (n <= tol) continue;  // <0, y> <= 1 holds everywhere
    hs.push_back({v / n, 1.0 / n});
  }
  for (const Vec& r : p.rays()) hs.push_back({r, 0.0});
  for (const Vec& l : p.lines()) {
    hs.push_back({l, 0.0});
    hs.push_back({-l, 0.0});
  }
  return Polyhedron::from_hrep(p.dim(), std::move(hs));
}

// ---- volume and moments ----------------------------------------------------

namespace {

struct FacetData {
  Vec normal;
  double offset;
  std::vector<int> members;
};

// Facets with vertex incidence of a full-dimensional point set in R^k.
std::vector<FacetData> facet_structure(const std::vector<Vec>& pts, int k) {
  const double tol = geom_tol();
  std::vector<Vec> rows;
  rows.reserve(pts.size());
  for (const Vec& p : pts) {
    Vec r(k + 1);
    r.head(k) = p;
    r[k] = 1.0;
    rows.push_back(r);
  }
  detail::ConeGenerators dual = detail::cone_generators(std::move(rows), k + 1);
  std::vector<FacetData> out;
  for (const Vec& g : dual.rays) {
    Vec a = g.head(k);
    double n = a.norm();
    if (n <= tol) continue;
    FacetData f;
    f.normal = a / n;
    f.offset = -g[k] / n;
    for (size_t i = 0; i < pts.size(); ++i)
      if (std::abs(f.normal.dot(pts[i]) - f.offset) <=
          tol * incidence_scale(pts[i]))
        f.members.push_back(static_cast<int>(i));
    out.push_back(std::move(f));
  }
  return out;
}

// Simplices (lists of k+1 original-space points) decomposing the convex hull.
// `loc` are coordinates within the current affine hull, `orig` the aligned
// ambient points.
void triangulate_rec(const std::vector<Vec>& loc, const std::vector<Vec>& orig,
                     int k, std::vector<std::vector<Vec>>& out) {
  const double tol = geom_tol();
  if (k == 0 || loc.size() == 1) {
    out.push_back({orig[0]});
    return;
  }
  if (k == 1) {
    int lo = 0, hi = 0;
    for (size_t i = 1; i < loc.size(); ++i) {
      if (loc[i][0] < loc[lo][0]) lo = static_cast<int>(i);
      if (loc[i][0] > loc[hi][0]) hi = static_cast<int>(i);
    }
    out.push_back({orig[lo], orig[hi]});
    return;
  }

  int apex = 0;
  for (size_t i = 1; i < loc.size(); ++i)
    if (lex_less(loc[i], loc[apex])) apex = static_cast<int>(i);

  for (const FacetData& f : facet_structure(loc, k)) {
    if (std::abs(f.normal.dot(loc[apex]) - f.offset) <=
        tol * incidence_scale(loc[apex]))
      continue;  // apex on the facet, zero-volume fan
    if (static_cast<int>(f.members.size()) < k) continue;

    Mat frame = orthonormal_frame(f.normal);  // rows 1..k-1 span the facet
    std::vector<Vec> sub_loc, sub_orig;
    const Vec& base = loc[f.members[0]];
    for (int idx : f.members) {
      Vec rel = loc[idx] - base;
      Vec lo(k - 1);
      for (int r = 1; r < k; ++r) lo[r - 1] = frame.row(r).dot(rel);
      sub_loc.push_back(lo);
      sub_orig.push_back(orig[idx]);
    }
    std::vector<std::vector<Vec>> faces;
    triangulate_rec(sub_loc, sub_orig, k - 1, faces);
    for (std::vector<Vec>& s : faces) {
      s.push_back(orig[apex]);
      out.push_back(std::move(s));
    }
  }
}

double simplex_volume(const std::vector<Vec>& s, int d) {
  Mat edges(d, d);
  for (int i = 0; i < d; ++i) edges.col(i) = s[i + 1] - s[0];
  double det = edges.determinant();
  double fact = 1.0;
  for (int i = 2; i <= d; ++i) fact *= i;
  return std::abs(det) / fact;
}

}  // namespace

std::vector<std::vector<Vec>> triangulate(const Polyhedron& p) {
  std::vector<std::vector<Vec>> out;
  triangulate_rec(p.vertices(), p.vertices(), p.dim(), out);
  return out;
}

double volume(const Polyhedron& p) {
  if (p.affine_dim() < p.dim()) return 0.0;
  if (!p.bounded()) return kInf;
  if (p.dim() == 1) {
    return p.vertices().back()[0] - p.vertices().front()[0];
  }
  double vol = 0.0;
  for (const std::vector<Vec>& s : triangulate(p))
    if (static_cast<int>(s.size()) == p.dim() + 1) vol += simplex_volume(s, p.dim());
  return vol;
}

Vec moment(const Polyhedron& p) {
  if (!p.bounded()) throw UnboundedInput("moment of an unbounded set");
  Vec m = zero_vec(p.dim());
  if (p.affine_dim() < p.dim()) return m;
  if (p.dim() == 1) {
    double a = p.vertices().front()[0], b = p.vertices().back()[0];
    m[0] = 0.5 * (b * b - a * a);
    return m;
  }
  for (const std::vector<Vec>& s : triangulate(p)) {
    if (static_cast<int>(s.size()) != p.dim() + 1) continue;
    double vol = simplex_volume(s, p.dim());
    Vec c = zero_vec(p.dim());
    for (const Vec& v : s) c += v;
    c /= static_cast<double>(s.size());
    m += vol * c;
  }
  return m;
}

// ---- comparisons -----------------------------------------------------------

namespace {

bool match_multiset(const std::vector<Vec>& a, const std::vector<Vec>& b,
                    double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Vec& v : a) {
    bool found = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && approx_vec(v, b[j], tol * incidence_scale(v))) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Vec& v : a) {
    Vec res = v;
    for (const Vec& u : b) res -= u.dot(res) * u;
    if (res.norm() > tol) return false;
  }
  return true;
}

}  // namespace

bool approx_equal(const Polyhedron& p, const Polyhedron& q, double tol) {
  if (p.dim() != q.dim()) return false;
  if (p.affine_dim() != q.affine_dim()) return false;
  if (!match_multiset(p.vertices(), q.vertices(), tol)) return false;
  if (!match_multiset(p.rays(), q.rays(), tol)) return false;
  if (!same_span(p.lines(), q.lines(), tol)) return false;

  if (p.hrep().size() != q.hrep().size()) return false;
  std::vector<bool> used(q.hrep().size(), false);
  for (const Halfspace& h : p.hrep()) {
    bool found = false;
    for (size_t j = 0; j < q.hrep().size(); ++j) {
      const Halfspace& g = q.hrep()[j];
      if (!used[j] && approx_vec(h.normal, g.normal, tol) &&
          std::abs(h.offset - g.offset) <= tol * (1.0 + std::abs(h.offset))) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool contains_polyhedron(const Polyhedron& q, const Polyhedron& p, double tol) {
  for (const Vec& v : p.vertices())
    if (!q.contains(v, tol)) return false;
  for (const Vec& r : p.ray_directions())
    if (!q.recession_contains(r, tol)) return false;
  return true;
}

double containment_margin(const Polyhedron& q, const Polyhedron& p) {
  if (!p.bounded()) throw UnboundedInput("margin of an unbounded set");
  double margin = kInf;
  for (const Halfspace& h : q.hrep())
    margin = std::min(margin, h.offset - p.support(h.normal));
  return margin;
}

}  // namespace cvxlab

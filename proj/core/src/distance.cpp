#include <cvxlab/geometry.hpp>
#include <cvxlab/tolerances.hpp>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace cvxlab {
namespace {

// Projection of x onto {y : rows y = rhs}; rows may be dependent, so solve
// through a complete orthogonal decomposition.
Vec project_affine(const Vec& x, const Eigen::MatrixXd& rows,
                   const Eigen::VectorXd& rhs) {
  if (rows.rows() == 0) return x;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(rows *
                                                              rows.transpose());
  Eigen::VectorXd lambda = cod.solve(rows * x - rhs);
  return x - rows.transpose() * lambda;
}

}  // namespace

// Primal active-set projection onto an H-polyhedron. Opposite halfspace pairs
// (the affine hull of lower-dimensional sets) are pinned as permanent
// equalities so their sign-free multipliers cannot cause cycling.
double distance_to(const Polyhedron& p, const Vec& x) {
  const double tol = geom_tol();
  if (p.contains(x, tol)) return 0.0;

  const auto& hs = p.hrep();
  const int d = p.dim();

  std::vector<int> eq, ineq;
  {
    std::vector<bool> paired(hs.size(), false);
    for (size_t i = 0; i < hs.size(); ++i) {
      if (paired[i]) continue;
      bool is_eq = false;
      for (size_t j = i + 1; j < hs.size(); ++j) {
        if (paired[j]) continue;
        if (approx_vec(hs[i].normal, -hs[j].normal, tol) &&
            std::abs(hs[i].offset + hs[j].offset) <= tol * (1.0 + std::abs(hs[i].offset))) {
          paired[i] = paired[j] = true;
          is_eq = true;
          break;
        }
      }
      if (is_eq)
        eq.push_back(static_cast<int>(i));
      else
        ineq.push_back(static_cast<int>(i));
    }
  }

  Vec y = p.vertices().front();
  std::vector<int> active;  // indices into ineq

  auto build = [&](Eigen::MatrixXd& rows, Eigen::VectorXd& rhs) {
    const int rows_n = static_cast<int>(eq.size() + active.size());
    rows.resize(rows_n, d);
    rhs.resize(rows_n);
    int r = 0;
    for (int i : eq) {
      rows.row(r) = hs[i].normal.transpose();
      rhs[r++] = hs[i].offset;
    }
    for (int i : active) {
      rows.row(r) = hs[ineq[i]].normal.transpose();
      rhs[r++] = hs[ineq[i]].offset;
    }
  };

  const int max_iter = 100 * static_cast<int>(hs.size() + 1);
  for (int iter = 0; iter < max_iter; ++iter) {
    Eigen::MatrixXd rows;
    Eigen::VectorXd rhs;
    build(rows, rhs);
    Vec target = project_affine(x, rows, rhs);

    if ((target - y).norm() <= tol) {
      if (active.empty()) break;
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(rows *
                                                                  rows.transpose());
      Eigen::VectorXd lambda = cod.solve(rows * (x - y));
      int worst = -1;
      double most_negative = -tol;
      for (size_t i = 0; i < active.size(); ++i) {
        double l = lambda[static_cast<int>(eq.size() + i)];
        if (l < most_negative) {
          most_negative = l;
          worst = static_cast<int>(i);
        }
      }
      if (worst < 0) break;  // KKT holds
      active.erase(active.begin() + worst);
      continue;
    }

    Vec dir = target - y;
    double alpha = 1.0;
    int blocking = -1;
    for (size_t i = 0; i < ineq.size(); ++i) {
      if (std::find(active.begin(), active.end(), static_cast<int>(i)) !=
          active.end())
        continue;
      double advance = hs[ineq[i]].normal.dot(dir);
      if (advance <= tol) continue;
      double slack = hs[ineq[i]].offset - hs[ineq[i]].normal.dot(y);
      double step = slack / advance;
      if (step < alpha) {
        alpha = std::max(step, 0.0);
        blocking = static_cast<int>(i);
      }
    }
    y += alpha * dir;
    if (blocking >= 0) active.push_back(blocking);
  }
  return (y - x).norm();
}

double directed_distance(const Polyhedron& k, const Polyhedron& f) {
  if (!k.bounded()) throw UnboundedInput("directed distance from an unbounded set");
  double best = 0.0;
  for (const Vec& v : k.vertices()) best = std::max(best, distance_to(f, v));
  return best;
}

double hausdorff_distance(const Polyhedron& p, const Polyhedron& q) {
  return std::max(directed_distance(p, q), directed_distance(q, p));
}

}  // namespace cvxlab

#include <cvxlab/geometry.hpp>
#include <cvxlab/tolerances.hpp>

#include <Eigen/Dense>
#include <cmath>

namespace cvxlab {
namespace {

// Inscribed-ellipsoid program over z = (center, packed symmetric S):
//   maximize  1/2 log det S + mu * sum_i log s_i(z),
//   s_i = b_i - <a_i, c> - sqrt(a_i^T S a_i),
// driven to the maximum-volume inscribed ellipsoid along a decreasing barrier
// path. The objective is concave and smooth on the feasible region; damped
// Newton with the exact Hessian converges to the path point at every stage.
struct BarrierProblem {
  const std::vector<Halfspace>& hs;
  int d;
  int nvars() const { return d + d * (d + 1) / 2; }

  // packed index k -> symmetric basis matrix E_k (unit diagonal entry or the
  // pair of unit off-diagonal entries); S = sum_k z_k E_k
  Mat basis(int k) const {
    Mat e = Mat::Zero(d, d);
    int idx = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        if (idx == k) {
          e(i, j) = 1.0;
          e(j, i) = 1.0;
          return e;
        }
        ++idx;
      }
    return e;
  }

  void unpack(const Eigen::VectorXd& z, Vec& c, Mat& s) const {
    c = z.head(d);
    s.resize(d, d);
    int k = d;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        s(i, j) = z[k];
        s(j, i) = z[k];
        ++k;
      }
  }

  double value(const Eigen::VectorXd& z, double mu) const {
    Vec c;
    Mat s;
    unpack(z, c, s);
    Eigen::LLT<Mat> llt(s);
    if (llt.info() != Eigen::Success) return -kInf;
    double logdet = 0.0;
    for (int i = 0; i < d; ++i) {
      double l = llt.matrixL()(i, i);
      if (!(l > 0)) return -kInf;
      logdet += std::log(l);
    }
    double total = logdet;  // = 1/2 log det S
    for (const Halfspace& h : hs) {
      double slack = h.offset - h.normal.dot(c) -
                     std::sqrt(h.normal.dot(s * h.normal));
      if (!(slack > 0)) return -kInf;
      total += mu * std::log(slack);
    }
    return total;
  }

  void derivatives(const Eigen::VectorXd& z, double mu, Eigen::VectorXd& grad,
                   Eigen::MatrixXd& hess) const {
    const int n = nvars();
    const int ns = n - d;
    Vec c;
    Mat s;
    unpack(z, c, s);
    Mat sinv = s.inverse();

    grad.setZero(n);
    hess.setZero(n, n);

    // 1/2 log det S part
    {
      int k = d;
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          grad[k] = (i == j) ? 0.5 * sinv(i, i) : sinv(i, j);
          ++k;
        }
      for (int a = 0; a < ns; ++a) {
        Mat ea = basis(a);
        Mat left = sinv * ea * sinv;
        for (int b = a; b < ns; ++b) {
          Mat eb = basis(b);
          double v = -0.5 * (left * eb).trace();
          hess(d + a, d + b) = v;
          hess(d + b, d + a) = v;
        }
      }
    }

    // barrier terms
    for (const Halfspace& h : hs) {
      const Vec& a = h.normal;
      double q = a.dot(s * a);
      double hv = std::sqrt(q);
      double slack = h.offset - a.dot(c) - hv;

      Eigen::VectorXd u(n);  // gradient of the slack
      u.head(d) = -a;
      Eigen::VectorXd qk(ns);  // gradient of q over the packed S block
      {
        int k = 0;
        for (int i = 0; i < d; ++i)
          for (int j = i; j < d; ++j) {
            qk[k] = (i == j) ? a[i] * a[i] : 2.0 * a[i] * a[j];
            ++k;
          }
      }
      u.tail(ns) = -qk / (2.0 * hv);

      grad += (mu / slack) * u;
      hess -= (mu / (slack * slack)) * (u * u.transpose());
      // curvature of the slack itself: + q q^T / (4 h^3) on the S block
      hess.bottomRightCorner(ns, ns) +=
          (mu / slack) * (qk * qk.transpose()) / (4.0 * hv * hv * hv);
    }
  }
};

}  // namespace

Ellipsoid john_ellipsoid(const Polyhedron& p) {
  if (p.affine_dim() < p.dim()) throw DegenerateBody();
  if (!p.bounded()) throw UnboundedInput("inscribed ellipsoid of an unbounded set");
  const int d = p.dim();

  BarrierProblem prob{p.hrep(), d};
  const int n = prob.nvars();

  Vec c0 = zero_vec(d);
  for (const Vec& v : p.vertices()) c0 += v;
  c0 /= static_cast<double>(p.vertices().size());
  double r0 = kInf;
  for (const Halfspace& h : p.hrep())
    r0 = std::min(r0, h.offset - h.normal.dot(c0));
  r0 = std::max(r0, 1e-12);

  Eigen::VectorXd z(n);
  z.head(d) = c0;
  {
    int k = d;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) z[k++] = (i == j) ? 0.25 * r0 * r0 : 0.0;
  }

  Eigen::VectorXd grad(n);
  Eigen::MatrixXd hess(n, n);
  for (double mu = 1.0; mu > 3e-16; mu *= 0.15) {
    for (int iter = 0; iter < 50; ++iter) {
      double f = prob.value(z, mu);
      prob.derivatives(z, mu, grad, hess);
      if (grad.lpNorm<Eigen::Infinity>() <= 1e-12 * (1.0 + std::abs(f))) break;

      Eigen::VectorXd dir = Eigen::LDLT<Eigen::MatrixXd>(hess).solve(-grad);
      if (!dir.allFinite() || grad.dot(dir) <= 0) dir = grad;

      double alpha = 1.0;
      double slope = grad.dot(dir);
      bool moved = false;
      while (alpha > 1e-16) {
        double trial = prob.value(z + alpha * dir, mu);
        if (std::isfinite(trial) && trial >= f + 1e-4 * alpha * slope) {
          z += alpha * dir;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
    }
  }

  Ellipsoid e;
  Mat s;
  prob.unpack(z, e.center, s);
  e.shape = s;
  return e;
}

}  // namespace cvxlab

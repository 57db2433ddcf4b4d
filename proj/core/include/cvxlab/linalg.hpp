#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

namespace cvxlab {

// Everything lives in dimension <= 4 (epigraphs of functions on R^n, n <= 3),
// homogenized cones add one more coordinate. Fixed max sizes keep the hot
// loops allocation-free while retaining a dynamic-size API.
constexpr int kMaxDim = 6;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                          Eigen::ColMajor, kMaxDim, kMaxDim>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline Vec zero_vec(int d) { return Vec::Zero(d); }

inline Vec unit_vec(int d, int i) {
  Vec v = Vec::Zero(d);
  v[i] = 1.0;
  return v;
}

inline bool approx_vec(const Vec& a, const Vec& b, double tol) {
  return (a - b).lpNorm<Eigen::Infinity>() <= tol;
}

// Strict weak order good enough for canonical sorting of float vectors.
inline bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

inline void lex_sort(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), [](const Vec& a, const Vec& b) { return lex_less(a, b); });
}

// Chebyshev points of the open interval (a, b); never touches the endpoints.
inline std::vector<double> chebyshev_nodes(double a, double b, int count) {
  std::vector<double> t(count);
  for (int k = 0; k < count; ++k) {
    double theta = M_PI * (2.0 * k + 1.0) / (2.0 * count);
    t[k] = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(theta);
  }
  return t;
}

// Coefficients of the interpolating polynomial in the shifted monomial basis
// (t - origin)^i, from nodes/values via Newton's divided differences.
std::vector<double> interpolate_shifted(const std::vector<double>& nodes,
                                        const std::vector<double>& values,
                                        double origin);

// Orthogonal matrix with first row = unit vector u (deterministic completion,
// determinant +1). Maps x to coordinates whose first entry is <u, x>.
Mat orthonormal_frame(const Vec& u);

}  // namespace cvxlab

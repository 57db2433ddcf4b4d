#include <cvxlab/linalg.hpp>

#include <cassert>

namespace cvxlab {

std::vector<double> interpolate_shifted(const std::vector<double>& nodes,
                                        const std::vector<double>& values,
                                        double origin) {
  const size_t k = nodes.size();
  assert(values.size() == k && k > 0);

  // Newton divided differences.
  std::vector<double> dd = values;
  for (size_t level = 1; level < k; ++level) {
    for (size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
      if (i == level) break;
    }
  }

  // Expand the Newton form into the (t - origin)^i basis.
  std::vector<double> coeffs(k, 0.0);
  std::vector<double> base(k, 0.0);  // running product, shifted basis
  base[0] = 1.0;
  size_t deg = 0;
  coeffs[0] = dd[0];
  for (size_t i = 1; i < k; ++i) {
    // base *= (t - nodes[i-1]) = (t - origin) - (nodes[i-1] - origin)
    double shift = nodes[i - 1] - origin;
    for (size_t p = deg + 1; p > 0; --p) base[p] = base[p - 1] - shift * base[p];
    base[0] *= -shift;
    ++deg;
    for (size_t p = 0; p <= deg; ++p) coeffs[p] += dd[i] * base[p];
  }
  return coeffs;
}

Mat orthonormal_frame(const Vec& u) {
  const int d = static_cast<int>(u.size());
  Vec e1 = unit_vec(d, 0);
  Mat frame = Mat::Identity(d, d);
  Vec w = u.normalized() - e1;
  double wn = w.squaredNorm();
  if (wn > 1e-24) {
    frame -= (2.0 / wn) * (w * w.transpose());
  }
  // Householder reflections have determinant -1; flip one later axis to get a
  // rotation while preserving the image of u.
  if (d > 1 && frame.determinant() < 0) frame.col(1) *= -1.0;
  // rows map x to the frame coordinates; row 0 is u
  return frame.transpose();
}

}  // namespace cvxlab

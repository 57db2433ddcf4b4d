#include <cvxlab/tolerances.hpp>

namespace cvxlab {

double& geom_tol() {
  static double tol = 1e-9;
  return tol;
}

double& john_tol() {
  static double tol = 1e-6;
  return tol;
}

double& centroid_tol() {
  static double tol = 1e-8;
  return tol;
}

}  // namespace cvxlab

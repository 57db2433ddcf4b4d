#pragma once

namespace cvxlab {

// Incidence / structural-equality tolerance. Overridable at startup
// (the CLI reads CVXLAB_TOL); treat as a process-wide constant afterwards.
double& geom_tol();      // default 1e-9

// Relative tolerance of the inscribed-ellipsoid solver.
double& john_tol();      // default 1e-6

// Tolerance of "centroid is at the origin" preconditions.
double& centroid_tol();  // default 1e-8

}  // namespace cvxlab

#pragma once

#include <cvxlab/linalg.hpp>

#include <vector>

namespace cvxlab::detail {

struct ConeGenerators {
  std::vector<Vec> lines;  // orthonormal basis of the lineality space
  std::vector<Vec> rays;   // extreme rays modulo the lines, unit length
};

// Extreme generators of {x in R^dim : <row, x> <= 0 for every row}.
// Incremental double description with the combinatorial adjacency test;
// adequate for dim <= 5 at the tolerances used here.
ConeGenerators cone_generators(std::vector<Vec> rows, int dim);

}  // namespace cvxlab::detail

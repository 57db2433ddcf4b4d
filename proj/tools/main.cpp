#include <cvxlab/geometry.hpp>
int main() { return 0; }

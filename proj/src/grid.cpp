#include "dpsbp/grid.hpp"

namespace dpsbp {

Grid1D::Grid1D(int n_points, double L, double x0) {
  if (n_points < 2) throw std::invalid_argument("Grid1D: need at least 2 points");
  if (L <= 0.0) throw std::invalid_argument("Grid1D: length must be positive");
  n = n_points;
  length = L;
  x_min = x0;
  dx = L / (n - 1);
  nodes.resize(n);
  for (int j = 0; j < n; ++j) nodes[j] = x0 + j * dx;
}

}  // namespace dpsbp

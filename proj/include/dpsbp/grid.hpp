#ifndef DPSBP_GRID_HPP
#define DPSBP_GRID_HPP

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace dpsbp {

using Field = Eigen::ArrayXd;

// Uniform 1D grid x_j = x_min + (j-1)*dx, j = 1..n, dx = L/(n-1).
// Both endpoints are stored; periodic closures couple them weakly.
struct Grid1D {
  int n = 0;
  double length = 0.0;
  double x_min = 0.0;
  double dx = 0.0;
  Field nodes;

  Grid1D() = default;
  Grid1D(int n_points, double L, double x0);

  static Grid1D unit(int n_points) { return Grid1D(n_points, 1.0, 0.0); }
};

// Tensor-product 2D grid with x-major flat indexing:
// flat(ix, iy) = ix*ny + iy, so the y index is contiguous.
struct Grid2D {
  Grid1D gx;
  Grid1D gy;

  Grid2D() = default;
  Grid2D(Grid1D x, Grid1D y) : gx(std::move(x)), gy(std::move(y)) {}

  int nx() const { return gx.n; }
  int ny() const { return gy.n; }
  long size() const { return static_cast<long>(gx.n) * gy.n; }
  long flat(int ix, int iy) const { return static_cast<long>(ix) * gy.n + iy; }
  double x(int ix) const { return gx.nodes[ix]; }
  double y(int iy) const { return gy.nodes[iy]; }
};

// Sample f(x) on a 1D grid.
template <typename F>
Field sample(const Grid1D& g, F&& f) {
  Field out(g.n);
  for (int i = 0; i < g.n; ++i) out[i] = f(g.nodes[i]);
  return out;
}

// Sample f(x, y) on a 2D grid in flat x-major order.
template <typename F>
Field sample(const Grid2D& g, F&& f) {
  Field out(g.size());
  for (int ix = 0; ix < g.nx(); ++ix)
    for (int iy = 0; iy < g.ny(); ++iy)
      out[g.flat(ix, iy)] = f(g.x(ix), g.y(iy));
  return out;
}

}  // namespace dpsbp

#endif

#include "dpsbp/field_ops.hpp"

#include <stdexcept>

namespace dpsbp {

void apply_2d(const PairSet2D& ops, Axis axis, OpKind kind, const Field& f, Field& out) {
  const int nx = ops.grid.nx();
  const int ny = ops.grid.ny();
  if (f.size() != static_cast<long>(nx) * ny) throw std::invalid_argument("apply_2d: size mismatch");
  out.resize(f.size());
  if (axis == Axis::Y) {
    const BandedOp& op = ops.py.op(kind);
    for (int ix = 0; ix < nx; ++ix)
      op.apply(f.data() + static_cast<long>(ix) * ny, 1, out.data() + static_cast<long>(ix) * ny, 1);
  } else {
    const BandedOp& op = ops.px.op(kind);
    for (int iy = 0; iy < ny; ++iy) op.apply(f.data() + iy, ny, out.data() + iy, ny);
  }
}

Field apply_2d(const PairSet2D& ops, Axis axis, OpKind kind, const Field& f) {
  Field out;
  apply_2d(ops, axis, kind, f, out);
  return out;
}

double inner_product(const PairSet2D& ops, const Field& f, const Field& g) {
  return inner_product(ops.px.norm, ops.py.norm, f, g);
}

double integral(const DiagonalNorm& norm, const Field& f) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < f.size(); ++j) acc += norm.weights[j] * f[j];
  return acc;
}

double integral(const PairSet2D& ops, const Field& f) {
  const auto& wx = ops.px.norm.weights;
  const auto& wy = ops.py.norm.weights;
  double acc = 0.0;
  long k = 0;
  for (long ix = 0; ix < wx.size(); ++ix)
    for (long iy = 0; iy < wy.size(); ++iy, ++k) acc += wx[ix] * wy[iy] * f[k];
  return acc;
}

}  // namespace dpsbp

#ifndef DPSBP_FIELD_OPS_HPP
#define DPSBP_FIELD_OPS_HPP

#include "dpsbp/grid.hpp"
#include "dpsbp/operator_pair.hpp"

namespace dpsbp {

enum class Axis { X, Y };

// Operator pairs for a tensor-product grid. Either pair may be shared
// between axes when the axis grids coincide.
struct PairSet2D {
  Grid2D grid;
  DpOperatorPair px;
  DpOperatorPair py;
};

// Applies the 1D operator along one axis of a flat x-major 2D field,
// line by line; equal to the Kronecker-product matrix action
// (D ox I_y) or (I_x ox D).
Field apply_2d(const PairSet2D& ops, Axis axis, OpKind kind, const Field& f);
void apply_2d(const PairSet2D& ops, Axis axis, OpKind kind, const Field& f, Field& out);

double inner_product(const PairSet2D& ops, const Field& f, const Field& g);

// Integral of f against 1 in the H (or HxH) quadrature.
double integral(const DiagonalNorm& norm, const Field& f);
double integral(const PairSet2D& ops, const Field& f);

}  // namespace dpsbp

#endif

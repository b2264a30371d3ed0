#ifndef DPSBP_OPERATOR_PAIR_HPP
#define DPSBP_OPERATOR_PAIR_HPP

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpsbp/grid.hpp"
#include "dpsbp/operator_coeffs.hpp"

namespace dpsbp {

// Raised when an assembled operator violates one of the SBP assumptions;
// carries the full diagnostic report text.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which operator of a dual pair to apply. Central is the average
// 0.5*(D+ + D-); Upwind is the dissipation difference 0.5*(D+ - D-).
enum class OpKind { Minus, Plus, Central, Upwind };

// Quadrature weights of the diagonal norm, dx included.
struct DiagonalNorm {
  Field weights;
  double sum() const { return weights.sum(); }
};

// Banded matrix with dense closure rows at both ends, a repeated interior
// stencil, and an optional rank-two periodic penalty acting on the first
// and last rows: y[0] += pen0*(x[0]-x[n-1]), y[n-1] += penN*(x[0]-x[n-1]).
struct BandedOp {
  int n = 0;
  std::vector<std::vector<double>> top;     // row i covers columns [0, top[i].size())
  std::vector<std::vector<double>> bottom;  // row covers columns [n - size, n)
  std::vector<int> offsets;                 // interior stencil, 1/dx included
  std::vector<double> weights;
  double pen0 = 0.0;
  double penN = 0.0;

  void apply(const double* x, long xstride, double* y, long ystride) const;
  Field apply(const Field& x) const;
  Eigen::MatrixXd dense() const;
};

// The dual pair (D-, D+, H) on a grid, plus the derived central and
// upwind combinations. Immutable after assembly; safe to share.
struct DpOperatorPair {
  std::string name;
  Grid1D grid;
  DiagonalNorm norm;
  int interior_order = 0;
  int boundary_order = 0;
  bool periodic = false;
  BandedOp d_minus, d_plus, central, upwind;

  const BandedOp& op(OpKind k) const;
  Eigen::MatrixXd dense(OpKind k) const { return op(k).dense(); }
  double dx() const { return grid.dx; }
};

// Builds H and D- from the coefficient blocks (right closure derived from
// the left one through the SBP relation), derives D+ = H^{-1}(B - Q-^T),
// and returns the pair only if it passes verify_pair.
DpOperatorPair assemble_pair(const OperatorCoefficients& coeffs, const Grid1D& grid);

// The embedded order-2/3 dual-pairing operator (printed blocks).
DpOperatorPair build_order2_pair(const Grid1D& grid);

// Weak periodic closure: D~± = D± + H^{-1} B_N with
// B_N = 0.5*(e1 e1^T - e1 eN^T + eN e1^T - eN eN^T).
DpOperatorPair make_periodic(const DpOperatorPair& pair);

// Resolve "builtin:dp2", "builtin:trad2" or a coefficient-file path.
DpOperatorPair build_operator(const std::string& id, const Grid1D& grid, bool periodic);

Field apply_1d(const DpOperatorPair& pair, OpKind kind, const Field& f);

double inner_product(const DiagonalNorm& norm, const Field& f, const Field& g);
double inner_product(const DiagonalNorm& nx, const DiagonalNorm& ny, const Field& f,
                     const Field& g);

}  // namespace dpsbp

#endif

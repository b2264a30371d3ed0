#ifndef DPSBP_OPERATOR_COEFFS_HPP
#define DPSBP_OPERATOR_COEFFS_HPP

#include <string>
#include <vector>

namespace dpsbp {

// Dimensionless stencil data for a dual-pairing SBP operator family.
// Only the backward operator D- is stored: H boundary weights, the
// upper-left boundary block of D-, and its interior stencil. Everything
// else (mirrored H, the lower-right block, and D+) is derived during
// assembly. Weights are pre-scaling: the assembler applies dx and 1/dx.
struct OperatorCoefficients {
  std::string name;
  int interior_order = 0;           // exactness degree of the interior stencils
  int boundary_order = 0;           // exactness degree of the boundary rows
  int closure_width = 0;            // number of special rows at each end
  std::vector<double> h_boundary;   // closure_width norm weights at the left edge
  std::vector<std::vector<double>> d_minus_boundary;  // rows anchored at column 0
  std::vector<int> d_minus_interior_offsets;
  std::vector<double> d_minus_interior_weights;

  // Structural checks: sizes consistent, positive H weights, interior
  // stencil annihilates constants and differentiates x exactly.
  void validate() const;

  // Smallest grid that keeps the two boundary closures disjoint.
  int min_points() const;
};

// The order-2/3 dual-pairing operator printed in the source material,
// embedded verbatim, and the order-2 traditional central operator
// (D- = D+ = D) expressed in the same format.
OperatorCoefficients dp2_coefficients();
OperatorCoefficients trad2_coefficients();

// Plain-text key-value coefficient file:
//   name = dp2
//   interior_order = 2
//   boundary_order = 1
//   closure_width = 2
//   h_boundary = 1/4 5/4
//   d_minus_boundary = -1 1 ; -1 1
//   d_minus_interior_offsets = -2 -1 0
//   d_minus_interior_weights = 1/2 -2 3/2
// Values may be decimal or rational literals; whitespace is free-form;
// '#' starts a comment. Rows of the boundary block are separated by ';'.
OperatorCoefficients parse_coefficients(const std::string& text);
OperatorCoefficients load_coefficients(const std::string& path);

}  // namespace dpsbp

#endif

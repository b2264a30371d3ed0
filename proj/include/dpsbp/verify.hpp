#ifndef DPSBP_VERIFY_HPP
#define DPSBP_VERIFY_HPP

#include <string>
#include <vector>

namespace dpsbp {

struct DpOperatorPair;

// Residual tolerances; the /dx scaling of operator entries is applied
// internally where it belongs.
struct VerifyTolerances {
  double quadrature = 1e-12;    // |sum(H) - L| / L
  double sbp = 1e-12;           // max |Q- + Q+^T - B| * dx
  double upwind_sym = 1e-12;    // max |A - A^T| * dx
  double upwind_eig = 1e-10;    // max eig((A+A^T)/2) * dx
  double polynomial = 1e-10;    // max residual * dx, unit-scale coordinates
  int eig_dense_limit = 512;    // above this, random quadratic-form sampling
  int eig_samples = 1000;
};

struct VerificationReport {
  std::string name;
  int n = 0;
  double dx = 0.0;
  bool periodic = false;

  double min_h = 0.0;
  double quadrature_error = 0.0;   // relative
  double sbp_residual = 0.0;       // scaled by dx
  double upwind_asymmetry = 0.0;   // scaled by dx
  double upwind_max_eig = 0.0;     // scaled by dx
  bool eig_sampled = false;

  // scaled max residual of D xi^d -> d xi^(d-1), per degree d = 0,1,...
  std::vector<double> poly_residual_closure;
  std::vector<double> poly_residual_interior;
  int measured_boundary_order = -1;
  int measured_interior_order = -1;
  int declared_boundary_order = 0;
  int declared_interior_order = 0;

  bool pass = false;
  std::string failure;  // names the violated assumption, empty when passing

  std::string to_string() const;
};

VerificationReport verify_pair(const DpOperatorPair& pair, VerifyTolerances tol = {});

}  // namespace dpsbp

#endif

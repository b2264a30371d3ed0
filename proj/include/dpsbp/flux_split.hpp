#ifndef DPSBP_FLUX_SPLIT_HPP
#define DPSBP_FLUX_SPLIT_HPP

#include <vector>

#include "dpsbp/field_ops.hpp"

namespace dpsbp {

// Per-component penalty coefficients of the upwind splitting
// f_i = 0.5 (f_i + gamma_i g_i) + 0.5 (f_i - gamma_i g_i).
struct SplitSpec {
  std::vector<double> gamma;
  void require_valid() const;
};

// Global Lax-Friedrichs coefficients: the grid maximum of the largest
// characteristic speed. Throw on non-finite input; the caller records a
// crash when that happens mid-run.
double lf_gamma_burgers(const Field& u);
double lf_gamma_swe(const Field& h, const Field& u, double g);
double lf_gamma_euler(const Field& rho, const Field& u, const Field& p, double gamma_gas);

// 0.5 * gamma * (D+ - D-) g, one component at a time. In 2D the same form
// is applied per axis with the axis pair.
Field upwind_dissipation(const DpOperatorPair& pair, double gamma, const Field& g);
Field upwind_dissipation(const PairSet2D& ops, Axis axis, double gamma, const Field& g);

// Quadratic form gamma * <g, 0.5 (D+ - D-) g>_H, the entropy-rate
// contribution of one dissipation component. Non-positive by (B.4).
double dissipation_form(const DpOperatorPair& pair, double gamma, const Field& g);
double dissipation_form(const PairSet2D& ops, Axis axis, double gamma, const Field& g);

}  // namespace dpsbp

#endif

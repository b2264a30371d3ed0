#ifndef DPSBP_MODELS_EULER_HPP
#define DPSBP_MODELS_EULER_HPP

#include <array>

#include "dpsbp/flux_split.hpp"
#include "dpsbp/variant.hpp"

namespace dpsbp::euler {

struct Params {
  double gamma_gas = 1.4;
};

// Square-root variables U = (sqrt(rho), sqrt(rho) u, sqrt(rho) v, sqrt(p)).
// The 1D model drops the third component.
void primitive_to_skew(const Field& rho, const Field& u, const Field& p, Field& r, Field& m,
                       Field& q);
void skew_to_primitive(const Field& r, const Field& m, const Field& q, Field& rho, Field& u,
                       Field& p);

void require_positive_skew(const Field& r, const Field& q);

// Dissipation coefficients per axis: gamma_1 = 1/4 max sqrt(rho) c,
// gamma_2 = 1/2 max rho c, gamma_3 = 1/2 max c, c = |u_axis| + sqrt(g p / rho).
std::array<double, 3> gamma_skew(const Params& p, const Field& rho, const Field& u_axis,
                                 const Field& press);

// Skew form right-hand sides. EntropyStable adds the dissipation operator
// S_eta on (sqrt-rho, velocity, sqrt-p) gradients; EntropyConserving zeroes it.
void rhs_skew_1d(const DpOperatorPair& pair, const Params& p, SchemeVariant variant,
                 const Field& r, const Field& m, const Field& q, Field& out_r, Field& out_m,
                 Field& out_q);
void rhs_skew_2d(const PairSet2D& ops, const Params& p, SchemeVariant variant, const Field& r,
                 const Field& m, const Field& w, const Field& q, Field& out_r, Field& out_m,
                 Field& out_w, Field& out_q);

// Conservative form with global Lax-Friedrichs splitting (LinearlyStable),
// state (rho, rho u[, rho v], e).
void rhs_cons_1d(const DpOperatorPair& pair, const Params& p, const Field& rho,
                 const Field& mu, const Field& en, Field& out_rho, Field& out_mu,
                 Field& out_en);
void rhs_cons_2d(const PairSet2D& ops, const Params& p, const Field& rho, const Field& mu,
                 const Field& mv, const Field& en, Field& out_rho, Field& out_mu,
                 Field& out_mv, Field& out_en);

// <1, r^2 + m^2/2 + w^2/2 + q^2/(gamma-1)>_H, the square-root-variable
// energy density; doubles as the entropy of the skew form.
double energy_total_1d(const DpOperatorPair& pair, const Params& p, const Field& r,
                       const Field& m, const Field& q);
double energy_total_2d(const PairSet2D& ops, const Params& p, const Field& r, const Field& m,
                       const Field& w, const Field& q);

// <1, rho (ln p - gamma ln rho)/(gamma-1)>_H, logged as a diagnostic only.
double thermo_entropy_total(const Params& p, const Field& rho, const Field& press,
                            const DiagonalNorm& nx, const DiagonalNorm* ny);

// Isentropic vortex (strength eps = 10) on [-8, 8]^2 with background
// (rho, u, v, p) = (1, 1, 1, 10); exact solution at time t is the initial
// profile translated by (t, t) with periodic wrapping.
void vortex_state(double x, double y, double t, const Params& p, double* rho, double* u,
                  double* v, double* press);

// Kelvin-Helmholtz initial data on [-1, 1]^2.
void khi_state(double x, double y, double* rho, double* u, double* v, double* press);

// 1D manufactured solution rho = 2 + 0.3 sin(2 pi (x-t)), u = 1,
// p = 2 + 0.3 sin(2 pi (x+t)), with closed-form forcings for both the
// skew and the conservative evolution variables.
void mms1d_primitive(double x, double t, double* rho, double* u, double* p);
void mms1d_forcing_skew(double x, double t, double* s_r, double* s_m, double* s_q);
void mms1d_forcing_cons(double x, double t, double gamma_gas, double* s_rho, double* s_mu,
                        double* s_en);

}  // namespace dpsbp::euler

#endif

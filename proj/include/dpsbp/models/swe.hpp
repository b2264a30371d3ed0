#ifndef DPSBP_MODELS_SWE_HPP
#define DPSBP_MODELS_SWE_HPP

#include <array>

#include "dpsbp/flux_split.hpp"
#include "dpsbp/variant.hpp"

namespace dpsbp::swe {

// Gravitational acceleration, Coriolis parameter, bottom topography.
// An empty topography field means a flat bottom.
struct Params {
  double g = 9.81;
  double f = 0.0;
  Field b;

  Field topography(long size) const {
    return b.size() == 0 ? Field::Zero(size) : b;
  }
};

void require_positive_depth(const Field& h);

// Penalty coefficients of the flux-form dissipation, evaluated from the
// current state: gamma_1 = 2 max h/c, gamma_2 = 4 max h(c - sqrt(gh)/2),
// gamma_3 (2D cross term) = 4 max h sqrt(|uv|); c = |u| + sqrt(gh).
std::array<double, 2> gamma_flux_1d(const Params& p, const Field& h, const Field& u);
std::array<double, 3> gamma_flux_2d(const Params& p, const Field& h, const Field& u,
                                    const Field& v, Axis axis);

// Flux form, 1D: state (h, hu). Skew variants use the split momentum terms
// with g h D(h+b) and dissipation on the entropy variables
// (g(h+b) - u^2/2, u); LinearlyStable uses the conservative advective flux,
// the same pressure+topography term, and Lax-Friedrichs dissipation on the
// equilibrium variables (h+b, hu), which keeps the lake at rest exact.
void rhs_flux_1d(const DpOperatorPair& pair, const Params& p, SchemeVariant variant,
                 const Field& h, const Field& hu, Field& out_h, Field& out_hu);

// Flux form, 2D: state (h, hu, hv) with optional Coriolis source
// (0, +f hv, -f hu).
void rhs_flux_2d(const PairSet2D& ops, const Params& p, SchemeVariant variant,
                 const Field& h, const Field& hu, const Field& hv, Field& out_h,
                 Field& out_hu, Field& out_hv);

// Vector-invariant form (entropy conserving only): state (h, u[, v]).
void rhs_vecinv_1d(const DpOperatorPair& pair, const Params& p, const Field& h,
                   const Field& u, Field& out_h, Field& out_u);
void rhs_vecinv_2d(const PairSet2D& ops, const Params& p, const Field& h, const Field& u,
                   const Field& v, Field& out_h, Field& out_u, Field& out_v);

// Totals of the standard invariants; velocities in, momenta via h u.
// Vorticity and enstrophy use the central operators.
struct Diagnostics {
  double energy = 0.0;
  double mass = 0.0;
  double momentum_x = 0.0;
  double momentum_y = 0.0;
  double vorticity = 0.0;
  double enstrophy = 0.0;
};
Diagnostics diagnostics_1d(const DpOperatorPair& pair, const Params& p, const Field& h,
                           const Field& u);
Diagnostics diagnostics_2d(const PairSet2D& ops, const Params& p, const Field& h,
                           const Field& u, const Field& v);

// Entropy variables of the flux form, used by probes and tests.
Field entropy_var_mass_1d(const Params& p, const Field& h, const Field& u);
Field entropy_var_mass_2d(const Params& p, const Field& h, const Field& u, const Field& v);

// Manufactured solutions and the matching closed-form forcings.
void mms1d(double x, double t, double g, double* h, double* u, double* s_h, double* s_hu);
void mms2d(double x, double y, double t, double g, double* h, double* u, double* v,
           double* s_h, double* s_hu, double* s_hv);

// Grid-wide evaluation exploiting the tensor structure of the 2D
// manufactured solution; forcing outputs may be null.
void mms2d_fields(const Grid2D& grid, double t, double g, Field* h, Field* u, Field* v,
                  Field* s_h, Field* s_hu, Field* s_hv);

// Immersed-bump topography of the lake-at-rest test on [0, 25].
double lake_topography(double x);

// Gaussian vortex pair in geostrophic balance on [0, 2 pi]^2 (f = g = 5, H = 8).
void merging_vortices_init(double x, double y, double f, double g, double H, double* h,
                           double* u, double* v);

// Opposed zonal jets with Gaussian height bumps on [0, 4e7]^2.
struct BarotropicParams {
  double f = 7.292e-5;
  double g = 9.80616;
  double H = 1e4;
  double u0 = 50.0;
  double L = 4e7;
  double k = 1e3;
};
void barotropic_shear_init(double x, double y, const BarotropicParams& bp, double* h,
                           double* u, double* v);

}  // namespace dpsbp::swe

#endif

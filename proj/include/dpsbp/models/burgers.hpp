#ifndef DPSBP_MODELS_BURGERS_HPP
#define DPSBP_MODELS_BURGERS_HPP

#include "dpsbp/flux_split.hpp"
#include "dpsbp/variant.hpp"

namespace dpsbp::burgers {

// Semi-discrete right-hand side for the inviscid Burgers equation on a
// periodic pair. Skew variants: -(1/3 u Du + 1/3 D u^2) + gamma/2 (D+-D-) u
// with gamma = |u|_inf (EntropyStable) or 0 (EntropyConserving).
// LinearlyStable: -D(u^2/2) + gamma/2 (D+-D-) u.
Field rhs(const DpOperatorPair& pair, SchemeVariant variant, const Field& u);

// E_h = 0.5 <u, u>_H
double entropy_total(const DiagonalNorm& norm, const Field& u);

// Manufactured solution u* = 2 + 0.3 sin(2 pi (x - t)) and the forcing
// s = du*/dt + u* du*/dx = 0.6 pi cos(2 pi (x - t)) (u* - 1).
double mms_exact(double x, double t);
double mms_forcing(double x, double t);

}  // namespace dpsbp::burgers

#endif

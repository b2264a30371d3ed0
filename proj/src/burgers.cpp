#include "dpsbp/models/burgers.hpp"

#include <cmath>

namespace dpsbp::burgers {

Field rhs(const DpOperatorPair& pair, SchemeVariant variant, const Field& u) {
  if (variant == SchemeVariant::LinearlyStable) {
    const double gamma = lf_gamma_burgers(u);
    Field flux = 0.5 * u * u;
    return Field(-pair.central.apply(flux) + upwind_dissipation(pair, gamma, u));
  }
  const double gamma =
      variant == SchemeVariant::EntropyStable ? lf_gamma_burgers(u) : 0.0;
  Field u2 = u * u;
  Field skew = (u * pair.central.apply(u) + pair.central.apply(u2)) / 3.0;
  return Field(-skew + upwind_dissipation(pair, gamma, u));
}

double entropy_total(const DiagonalNorm& norm, const Field& u) {
  return 0.5 * inner_product(norm, u, u);
}

double mms_exact(double x, double t) { return 2.0 + 0.3 * std::sin(2.0 * M_PI * (x - t)); }

double mms_forcing(double x, double t) {
  return 0.6 * M_PI * std::cos(2.0 * M_PI * (x - t)) * (mms_exact(x, t) - 1.0);
}

}  // namespace dpsbp::burgers

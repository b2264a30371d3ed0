#include "dpsbp/flux_split.hpp"

#include <cmath>
#include <stdexcept>

namespace dpsbp {

void SplitSpec::require_valid() const {
  for (double g : gamma)
    if (!(g >= 0.0) || !std::isfinite(g))
      throw std::domain_error("SplitSpec: gamma must be finite and non-negative");
}

namespace {
void require_finite(const Field& f, const char* what) {
  if (!f.isFinite().all()) throw std::domain_error(std::string("non-finite state in ") + what);
}
}  // namespace

double lf_gamma_burgers(const Field& u) {
  require_finite(u, "lf_gamma_burgers");
  return u.abs().maxCoeff();
}

double lf_gamma_swe(const Field& h, const Field& u, double g) {
  require_finite(h, "lf_gamma_swe");
  require_finite(u, "lf_gamma_swe");
  return (u.abs() + (g * h).sqrt()).maxCoeff();
}

double lf_gamma_euler(const Field& rho, const Field& u, const Field& p, double gamma_gas) {
  require_finite(rho, "lf_gamma_euler");
  require_finite(u, "lf_gamma_euler");
  require_finite(p, "lf_gamma_euler");
  return (u.abs() + (gamma_gas * p / rho).sqrt()).maxCoeff();
}

Field upwind_dissipation(const DpOperatorPair& pair, double gamma, const Field& g) {
  if (gamma == 0.0) return Field::Zero(g.size());
  return gamma * pair.upwind.apply(g);
}

Field upwind_dissipation(const PairSet2D& ops, Axis axis, double gamma, const Field& g) {
  if (gamma == 0.0) return Field::Zero(g.size());
  return gamma * apply_2d(ops, axis, OpKind::Upwind, g);
}

double dissipation_form(const DpOperatorPair& pair, double gamma, const Field& g) {
  if (gamma == 0.0) return 0.0;
  return gamma * inner_product(pair.norm, g, pair.upwind.apply(g));
}

double dissipation_form(const PairSet2D& ops, Axis axis, double gamma, const Field& g) {
  if (gamma == 0.0) return 0.0;
  return gamma * inner_product(ops, g, apply_2d(ops, axis, OpKind::Upwind, g));
}

}  // namespace dpsbp

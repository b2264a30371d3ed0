#ifndef DPSBP_PROBES_HPP
#define DPSBP_PROBES_HPP

#include <cstdint>
#include <string>

#include "dpsbp/variant.hpp"

namespace dpsbp {

enum class ModelId { Burgers, Swe1D, Swe2D, SweVecInv1D, SweVecInv2D, Euler1D, Euler2D };

ModelId parse_model(const std::string& s);
const char* model_name(ModelId m);

// Semi-discrete structure checks on random admissible states, without time
// integration. Residuals are normalized by the roundoff scale of the inner
// products involved, so thresholds are resolution-independent.
struct ProbeReport {
  std::string model;
  std::string variant;
  int trials = 0;
  int n = 0;

  double max_conservation_residual = 0.0;  // worst component, normalized
  double max_entropy_residual = 0.0;       // identity vs dissipation form
  double max_dissipation_form = -1e300;    // most positive quadratic form, normalized
  bool entropy_checked = false;

  bool pass(double tol = 1e-11) const;
  std::string to_string() const;
};

ProbeReport probe_semidiscrete(ModelId model, SchemeVariant variant,
                               const std::string& operator_id, int n, int trials,
                               std::uint64_t seed);

}  // namespace dpsbp

#endif

#ifndef DPSBP_VARIANT_HPP
#define DPSBP_VARIANT_HPP

#include <string>

namespace dpsbp {

// Scheme family: skew-symmetric split form with upwind dissipation on the
// entropy variables (EntropyStable), the same with the dissipation zeroed
// (EntropyConserving), or the conservative form with global Lax-Friedrichs
// splitting on the conserved variables (LinearlyStable).
enum class SchemeVariant { EntropyStable, EntropyConserving, LinearlyStable };

inline const char* variant_name(SchemeVariant v) {
  switch (v) {
    case SchemeVariant::EntropyStable: return "entropy_stable";
    case SchemeVariant::EntropyConserving: return "entropy_conserving";
    case SchemeVariant::LinearlyStable: return "linearly_stable";
  }
  return "?";
}

SchemeVariant parse_variant(const std::string& s);

}  // namespace dpsbp

#endif

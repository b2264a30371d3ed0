#ifndef DPSBP_TIME_LOOP_HPP
#define DPSBP_TIME_LOOP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpsbp/diagnostics.hpp"
#include "dpsbp/grid.hpp"

namespace dpsbp {

using State = std::vector<Field>;

// Everything the integrator needs to know about a semi-discrete system.
struct Problem {
  std::function<void(double t, const State& u, State& rate)> rhs;
  std::function<bool(const State& u)> admissible;  // finite + positivity
  std::vector<std::string> channels;
  std::function<std::vector<double>(const State& u)> invariants;
  // Magnitude scales used as fallback denominators for relative changes
  // when an invariant starts near zero.
  std::function<std::vector<double>(const State& u)> invariant_scales;
};

// Five-stage fourth-order strong-stability-preserving Runge-Kutta scheme
// in Shu-Osher form (Spiteri & Ruuth). Stage times follow from applying
// the same convex recursions to t itself.
struct SspRk54Tableau {
  static constexpr double b10 = 0.391752226571890;
  static constexpr double a20 = 0.444370493651235, a21 = 0.555629506348765,
                          b21 = 0.368410593050371;
  static constexpr double a30 = 0.620101851488403, a32 = 0.379898148511597,
                          b32 = 0.251891774271694;
  static constexpr double a40 = 0.178079954393132, a43 = 0.821920045606868,
                          b43 = 0.544974750228521;
  static constexpr double f2 = 0.517231671970585, f3 = 0.096059710526147,
                          fb3 = 0.063692468666290, f4 = 0.386708617503269,
                          fb4 = 0.226007483236906;
  static constexpr double c1 = b10;
  static constexpr double c2 = a21 * c1 + b21;
  static constexpr double c3 = a32 * c2 + b32;
  static constexpr double c4 = a43 * c3 + b43;
};

// One SSP-RK(5,4) update. Every stage re-evaluates the right-hand side on
// the current stage state, so split coefficients refresh per stage. On a
// non-admissible stage state (or a positivity throw inside the RHS) the
// state is left untouched and the stage-local time is returned.
std::optional<double> rk_step(const Problem& problem, double t, double dt, State& u);

struct TimeLoopOptions {
  double dt = 0.0;
  double t_final = 0.0;
  long diag_stride = 1;
  std::vector<double> snapshot_times;
};

struct RunRecord {
  double final_time = 0.0;
  bool crashed = false;
  double crash_time = 0.0;
  long steps = 0;
  InvariantSeries series;
  double wall_seconds = 0.0;
};

using SnapshotSink = std::function<void(double t, const State& u)>;

// Fixed-step integration to t_final (last step shortened to land exactly),
// recording invariants every diag_stride steps. A crash stops the run
// cleanly and is reported in the record, never as an exception. On return
// u holds the final state (the last admissible one if the run crashed).
RunRecord run(const Problem& problem, State& u, const TimeLoopOptions& opt,
              const SnapshotSink& snapshot = nullptr);

}  // namespace dpsbp

#endif

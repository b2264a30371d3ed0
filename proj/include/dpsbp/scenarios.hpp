#ifndef DPSBP_SCENARIOS_HPP
#define DPSBP_SCENARIOS_HPP

#include <cstdint>
#include <memory>

#include "dpsbp/config.hpp"
#include "dpsbp/time_loop.hpp"
#include "dpsbp/variant.hpp"

namespace dpsbp {

struct RunSettings {
  std::string model = "burgers";
  std::string scenario = "mms";
  SchemeVariant variant = SchemeVariant::EntropyStable;
  std::string operator_id = "builtin:dp2";
  int n = 64;
  double cfl = -1.0;      // negative: scenario default
  double t_final = -1.0;  // negative: scenario default
  long diag_stride = 1;
  std::vector<double> snapshot_times;
  bool snapshots_set = false;
  std::string out_dir = "out";
  std::uint64_t seed = 1234;
  Config params;  // scenario.* keys

  static RunSettings from_config(const Config& cfg);
};

// A scenario instantiated on a grid: the semi-discrete problem, its initial
// state, resolved time-loop options, and the scenario's exact solution and
// error norm when it has one.
struct BuiltProblem {
  Problem problem;
  State initial;
  std::vector<std::string> components;
  bool is2d = false;
  Grid1D grid1;
  Grid2D grid2;
  std::shared_ptr<DpOperatorPair> pair;
  std::shared_ptr<PairSet2D> ops;
  std::function<State(double)> exact;  // null when the scenario has none
  TimeLoopOptions options;

  std::string model, scenario, variant, operator_id;
  double gamma_gas = 1.4;

  double error_l2(const State& numeric, const State& reference) const;
  // 1D: CSV (x, components); 2D: legacy structured-points volume file with
  // the model's primitive fields.
  std::string snapshot_path(const std::string& dir, double t) const;
  void write_snapshot(const std::string& dir, double t, const State& u) const;
  std::vector<std::string> snapshot_fields() const;
  State snapshot_state(const State& u) const;
};

BuiltProblem build_problem(const RunSettings& settings);

}  // namespace dpsbp

#endif

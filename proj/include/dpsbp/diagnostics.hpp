#ifndef DPSBP_DIAGNOSTICS_HPP
#define DPSBP_DIAGNOSTICS_HPP

#include <random>
#include <string>
#include <vector>

#include "dpsbp/field_ops.hpp"

namespace dpsbp {

// Time series of invariant totals with relative changes anchored at t=0.
struct InvariantSeries {
  std::vector<std::string> channels;
  std::vector<double> times;
  std::vector<std::vector<double>> values;  // absolute totals per record
  std::vector<double> initial;
  std::vector<double> denom;  // denominators for relative change

  void start(std::vector<std::string> names, std::vector<double> first,
             std::vector<double> scales);
  void record(double t, std::vector<double> vals);
  double relative(size_t row, size_t channel) const;
  size_t rows() const { return times.size(); }
};

// H-weighted l2 error summed over components, unnormalized.
double l2_error(const DiagonalNorm& norm, const std::vector<Field>& numeric,
                const std::vector<Field>& exact);
double l2_error(const PairSet2D& ops, const std::vector<Field>& numeric,
                const std::vector<Field>& exact);

// Convergence table with eoc_i = ln(e_{i-1}/e_i) / ln(n_i/n_{i-1}).
struct ConvergenceRow {
  int n = 0;
  double error = 0.0;
  double eoc = 0.0;
  bool has_eoc = false;
};
struct ConvergenceTable {
  std::string label;
  std::vector<ConvergenceRow> rows;

  // Least-squares slope of log(error) against log(n).
  double ls_slope() const;
  // Observed order across the whole path: log(e_first/e_last) over
  // log(n_last/n_first). Robust to single-row phase-cancellation dips.
  double overall_eoc() const;
};
ConvergenceTable eoc_table(const std::vector<int>& ns, const std::vector<double>& errors,
                           const std::string& label = "");

// Smooth random periodic fields for semi-discrete probes: a few Fourier
// modes with a constant offset keeping positive quantities away from zero.
Field random_smooth_field(const Grid1D& g, std::mt19937_64& rng, double offset,
                          double amplitude);
Field random_smooth_field(const Grid2D& g, std::mt19937_64& rng, double offset,
                          double amplitude);

}  // namespace dpsbp

#endif

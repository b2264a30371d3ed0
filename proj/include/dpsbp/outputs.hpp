#ifndef DPSBP_OUTPUTS_HPP
#define DPSBP_OUTPUTS_HPP

#include <map>
#include <string>
#include <vector>

#include "dpsbp/diagnostics.hpp"
#include "dpsbp/time_loop.hpp"

namespace dpsbp {

// Full-precision, locale-independent number formatting shared by all
// writers, so identical runs produce byte-identical files.
std::string format_double(double v);

// Header `time,<channel...>`; one row per record with relative changes.
void write_diagnostics_csv(const std::string& path, const InvariantSeries& series);

// 1D snapshot: columns x then one per component.
void write_snapshot_csv(const std::string& path, const Grid1D& grid,
                        const std::vector<std::string>& components, const State& u);

// 2D snapshot: legacy structured-points volume file, one scalar section
// per component, extent nx x ny x 1, origin and spacing from the grid.
void write_snapshot_vtk(const std::string& path, const Grid2D& grid,
                        const std::vector<std::string>& components, const State& u);

// Key-value run summary; parse_summary round-trips what write_summary wrote.
void write_summary(const std::string& path, const RunRecord& rec,
                   const std::map<std::string, std::string>& extra);
std::map<std::string, std::string> parse_summary(const std::string& path);

void write_convergence_csv(const std::string& path,
                           const std::vector<ConvergenceTable>& tables);

struct CrashCell {
  std::string scheme;
  std::string op;
  int n = 0;
  double end_time = 0.0;
  bool crashed = false;
};
void write_crash_csv(const std::string& path, const std::vector<CrashCell>& cells);

void ensure_directory(const std::string& path);

}  // namespace dpsbp

#endif

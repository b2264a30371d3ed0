#include "dpsbp/outputs.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dpsbp {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {
std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}
}  // namespace

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw std::runtime_error("cannot create directory " + path + ": " + ec.message());
}

void write_diagnostics_csv(const std::string& path, const InvariantSeries& series) {
  auto out = open_out(path);
  out << "time";
  for (const auto& c : series.channels) out << "," << c;
  out << "\n";
  for (size_t r = 0; r < series.rows(); ++r) {
    out << format_double(series.times[r]);
    for (size_t c = 0; c < series.channels.size(); ++c)
      out << "," << format_double(series.relative(r, c));
    out << "\n";
  }
}

void write_snapshot_csv(const std::string& path, const Grid1D& grid,
                        const std::vector<std::string>& components, const State& u) {
  auto out = open_out(path);
  out << "x";
  for (const auto& c : components) out << "," << c;
  out << "\n";
  for (int i = 0; i < grid.n; ++i) {
    out << format_double(grid.nodes[i]);
    for (const auto& f : u) out << "," << format_double(f[i]);
    out << "\n";
  }
}

void write_snapshot_vtk(const std::string& path, const Grid2D& grid,
                        const std::vector<std::string>& components, const State& u) {
  auto out = open_out(path);
  out << "# vtk DataFile Version 3.0\n";
  out << "structured grid snapshot\n";
  out << "ASCII\n";
  out << "DATASET STRUCTURED_POINTS\n";
  out << "DIMENSIONS " << grid.nx() << " " << grid.ny() << " 1\n";
  out << "ORIGIN " << format_double(grid.gx.x_min) << " " << format_double(grid.gy.x_min)
      << " 0\n";
  out << "SPACING " << format_double(grid.gx.dx) << " " << format_double(grid.gy.dx) << " 1\n";
  out << "POINT_DATA " << grid.size() << "\n";
  for (size_t c = 0; c < components.size(); ++c) {
    out << "SCALARS " << components[c] << " double 1\n";
    out << "LOOKUP_TABLE default\n";
    // legacy volume layout: x varies fastest
    for (int iy = 0; iy < grid.ny(); ++iy)
      for (int ix = 0; ix < grid.nx(); ++ix)
        out << format_double(u[c][grid.flat(ix, iy)]) << "\n";
  }
}

void write_summary(const std::string& path, const RunRecord& rec,
                   const std::map<std::string, std::string>& extra) {
  auto out = open_out(path);
  out << "final_time = " << format_double(rec.final_time) << "\n";
  out << "crashed = " << (rec.crashed ? "true" : "false") << "\n";
  if (rec.crashed) out << "crash_time = " << format_double(rec.crash_time) << "\n";
  out << "steps = " << rec.steps << "\n";
  out << "wall_seconds = " << format_double(rec.wall_seconds) << "\n";
  for (size_t c = 0; c < rec.series.channels.size(); ++c) {
    double lo = 0.0, hi = 0.0;
    for (size_t r = 0; r < rec.series.rows(); ++r) {
      const double v = rec.series.relative(r, c);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    out << "rel_change_min." << rec.series.channels[c] << " = " << format_double(lo) << "\n";
    out << "rel_change_max." << rec.series.channels[c] << " = " << format_double(hi) << "\n";
  }
  for (const auto& [k, v] : extra) out << k << " = " << v << "\n";
}

std::map<std::string, std::string> parse_summary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read summary " + path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r\n");
      auto b = s.find_last_not_of(" \t\r\n");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

void write_convergence_csv(const std::string& path,
                           const std::vector<ConvergenceTable>& tables) {
  auto out = open_out(path);
  out << "scheme,n,error,eoc\n";
  for (const auto& t : tables)
    for (const auto& r : t.rows) {
      out << t.label << "," << r.n << "," << format_double(r.error) << ",";
      if (r.has_eoc) out << format_double(r.eoc);
      out << "\n";
    }
}

void write_crash_csv(const std::string& path, const std::vector<CrashCell>& cells) {
  auto out = open_out(path);
  out << "scheme,operator,n,end_time,crashed\n";
  for (const auto& c : cells)
    out << c.scheme << "," << c.op << "," << c.n << "," << format_double(c.end_time) << ","
        << (c.crashed ? "true" : "false") << "\n";
}

}  // namespace dpsbp

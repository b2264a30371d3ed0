#include "dpsbp/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace dpsbp {

void InvariantSeries::start(std::vector<std::string> names, std::vector<double> first,
                            std::vector<double> scales) {
  channels = std::move(names);
  initial = first;
  denom.resize(initial.size());
  for (size_t i = 0; i < initial.size(); ++i) {
    const double scale = i < scales.size() ? std::abs(scales[i]) : 0.0;
    const double base = std::abs(initial[i]);
    denom[i] = base > 1e-8 * scale ? base : scale;
    if (!(denom[i] > 0.0)) denom[i] = 1.0;
  }
  times.clear();
  values.clear();
  record(0.0, std::move(first));
}

void InvariantSeries::record(double t, std::vector<double> vals) {
  if (vals.size() != channels.size())
    throw std::invalid_argument("InvariantSeries: channel count mismatch");
  times.push_back(t);
  values.push_back(std::move(vals));
}

double InvariantSeries::relative(size_t row, size_t channel) const {
  return (values[row][channel] - initial[channel]) / denom[channel];
}

double l2_error(const DiagonalNorm& norm, const std::vector<Field>& numeric,
                const std::vector<Field>& exact) {
  if (numeric.size() != exact.size()) throw std::invalid_argument("l2_error: component mismatch");
  double acc = 0.0;
  for (size_t c = 0; c < numeric.size(); ++c) {
    Field d = numeric[c] - exact[c];
    acc += inner_product(norm, d, d);
  }
  return std::sqrt(acc);
}

double l2_error(const PairSet2D& ops, const std::vector<Field>& numeric,
                const std::vector<Field>& exact) {
  if (numeric.size() != exact.size()) throw std::invalid_argument("l2_error: component mismatch");
  double acc = 0.0;
  for (size_t c = 0; c < numeric.size(); ++c) {
    Field d = numeric[c] - exact[c];
    acc += inner_product(ops, d, d);
  }
  return std::sqrt(acc);
}

ConvergenceTable eoc_table(const std::vector<int>& ns, const std::vector<double>& errors,
                           const std::string& label) {
  if (ns.size() != errors.size()) throw std::invalid_argument("eoc_table: size mismatch");
  for (size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw std::invalid_argument("eoc_table: n must increase");
  ConvergenceTable t;
  t.label = label;
  for (size_t i = 0; i < ns.size(); ++i) {
    ConvergenceRow row;
    row.n = ns[i];
    row.error = errors[i];
    if (i > 0 && errors[i] > 0.0 && errors[i - 1] > 0.0) {
      row.eoc = std::log(errors[i - 1] / errors[i]) /
                std::log(static_cast<double>(ns[i]) / ns[i - 1]);
      row.has_eoc = true;
    }
    t.rows.push_back(row);
  }
  return t;
}

double ConvergenceTable::overall_eoc() const {
  if (rows.size() < 2) return 0.0;
  const auto& a = rows.front();
  const auto& b = rows.back();
  if (!(a.error > 0.0) || !(b.error > 0.0)) return 0.0;
  return std::log(a.error / b.error) / std::log(static_cast<double>(b.n) / a.n);
}

double ConvergenceTable::ls_slope() const {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& r : rows) {
    if (!(r.error > 0.0)) continue;
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return 0.0;
  return -(m * sxy - sx * sy) / (m * sxx - sx * sx);
}

namespace {
constexpr int kModes = 3;
}

Field random_smooth_field(const Grid1D& g, std::mt19937_64& rng, double offset,
                          double amplitude) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  Field out = Field::Constant(g.n, offset);
  for (int k = 1; k <= kModes; ++k) {
    const double a = amplitude * amp(rng) / k;
    const double ph = phase(rng);
    for (int i = 0; i < g.n; ++i) {
      const double xi = (g.nodes[i] - g.x_min) / g.length;
      out[i] += a * std::cos(2.0 * M_PI * k * xi + ph);
    }
  }
  return out;
}

Field random_smooth_field(const Grid2D& g, std::mt19937_64& rng, double offset,
                          double amplitude) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  Field out = Field::Constant(g.size(), offset);
  for (int kx = 0; kx <= kModes; ++kx) {
    for (int ky = 0; ky <= kModes; ++ky) {
      if (kx == 0 && ky == 0) continue;
      const double a = amplitude * amp(rng) / (kx + ky);
      const double ph = phase(rng);
      for (int ix = 0; ix < g.nx(); ++ix) {
        const double xi = (g.x(ix) - g.gx.x_min) / g.gx.length;
        for (int iy = 0; iy < g.ny(); ++iy) {
          const double eta = (g.y(iy) - g.gy.x_min) / g.gy.length;
          out[g.flat(ix, iy)] += a * std::cos(2.0 * M_PI * (kx * xi + ky * eta) + ph);
        }
      }
    }
  }
  return out;
}

}  // namespace dpsbp

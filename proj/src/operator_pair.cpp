#include "dpsbp/operator_pair.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpsbp/verify.hpp"

namespace dpsbp {

void BandedOp::apply(const double* x, long xs, double* y, long ys) const {
  const int s_top = static_cast<int>(top.size());
  const int s_bot = static_cast<int>(bottom.size());
  for (int i = 0; i < s_top; ++i) {
    double acc = 0.0;
    const auto& row = top[i];
    for (size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j * xs];
    y[i * ys] = acc;
  }
  const int nw = static_cast<int>(offsets.size());
  for (int i = s_top; i < n - s_bot; ++i) {
    double acc = 0.0;
    for (int k = 0; k < nw; ++k) acc += weights[k] * x[(i + offsets[k]) * xs];
    y[i * ys] = acc;
  }
  for (int i = 0; i < s_bot; ++i) {
    const auto& row = bottom[i];
    const int c0 = n - static_cast<int>(row.size());
    double acc = 0.0;
    for (size_t j = 0; j < row.size(); ++j) acc += row[j] * x[(c0 + j) * xs];
    y[(n - s_bot + i) * ys] = acc;
  }
  if (pen0 != 0.0 || penN != 0.0) {
    const double jump = x[0] - x[(n - 1) * xs];
    y[0] += pen0 * jump;
    y[(n - 1) * ys] += penN * jump;
  }
}

Field BandedOp::apply(const Field& x) const {
  Field y(n);
  apply(x.data(), 1, y.data(), 1);
  return y;
}

Eigen::MatrixXd BandedOp::dense() const {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  const int s_top = static_cast<int>(top.size());
  const int s_bot = static_cast<int>(bottom.size());
  for (int i = 0; i < s_top; ++i)
    for (size_t j = 0; j < top[i].size(); ++j) M(i, j) = top[i][j];
  for (int i = s_top; i < n - s_bot; ++i)
    for (size_t k = 0; k < offsets.size(); ++k) M(i, i + offsets[k]) = weights[k];
  for (int i = 0; i < s_bot; ++i) {
    const int c0 = n - static_cast<int>(bottom[i].size());
    for (size_t j = 0; j < bottom[i].size(); ++j) M(n - s_bot + i, c0 + j) = bottom[i][j];
  }
  M(0, 0) += pen0;
  M(0, n - 1) -= pen0;
  M(n - 1, 0) += penN;
  M(n - 1, n - 1) -= penN;
  return M;
}

const BandedOp& DpOperatorPair::op(OpKind k) const {
  switch (k) {
    case OpKind::Minus: return d_minus;
    case OpKind::Plus: return d_plus;
    case OpKind::Central: return central;
    case OpKind::Upwind: return upwind;
  }
  throw std::logic_error("bad OpKind");
}

namespace {

// Recover the banded structure of a dense operator: interior stencil taken
// from the middle row, closure rows kept dense. Throws if rows between the
// detected closures deviate from the stencil.
BandedOp extract_banded(const Eigen::MatrixXd& M, double scale) {
  const int n = static_cast<int>(M.rows());
  const double tol = 1e-13 * scale;
  BandedOp op;
  op.n = n;

  const int mid = n / 2;
  std::vector<int> offs;
  std::vector<double> w;
  for (int j = 0; j < n; ++j)
    if (std::abs(M(mid, j)) > tol) {
      offs.push_back(j - mid);
      w.push_back(M(mid, j));
    }
  op.offsets = offs;
  op.weights = w;

  auto row_matches = [&](int i) {
    if (offs.empty()) return false;
    if (i + offs.front() < 0 || i + offs.back() >= n) return false;
    size_t k = 0;
    for (int j = 0; j < n; ++j) {
      const bool in_stencil = k < offs.size() && j == i + offs[k];
      if (in_stencil) {
        if (std::abs(M(i, j) - w[k]) > tol) return false;
        ++k;
      } else if (std::abs(M(i, j)) > tol) {
        return false;
      }
    }
    return true;
  };

  int s_top = 0;
  while (s_top < mid && !row_matches(s_top)) ++s_top;
  int s_bot = 0;
  while (s_bot < mid && !row_matches(n - 1 - s_bot)) ++s_bot;
  for (int i = s_top; i < n - s_bot; ++i)
    if (!row_matches(i))
      throw std::runtime_error("operator assembly: interior rows are not banded");

  for (int i = 0; i < s_top; ++i) {
    int width = 0;
    for (int j = 0; j < n; ++j)
      if (std::abs(M(i, j)) > tol) width = j + 1;
    std::vector<double> row(width, 0.0);
    for (int j = 0; j < width; ++j) row[j] = M(i, j);
    op.top.push_back(std::move(row));
  }
  for (int i = n - s_bot; i < n; ++i) {
    int first = n - 1;
    for (int j = n - 1; j >= 0; --j)
      if (std::abs(M(i, j)) > tol) first = j;
    std::vector<double> row(n - first, 0.0);
    for (int j = first; j < n; ++j) row[j - first] = M(i, j);
    op.bottom.push_back(std::move(row));
  }
  return op;
}

}  // namespace

DpOperatorPair assemble_pair(const OperatorCoefficients& coeffs, const Grid1D& grid) {
  coeffs.validate();
  const int n = grid.n;
  if (n < coeffs.min_points())
    throw std::invalid_argument(coeffs.name + ": grid too small for the boundary closure (need >= " +
                                std::to_string(coeffs.min_points()) + " points)");
  const double dx = grid.dx;
  const int s = coeffs.closure_width;

  DpOperatorPair pair;
  pair.name = coeffs.name;
  pair.grid = grid;
  pair.interior_order = coeffs.interior_order;
  pair.boundary_order = coeffs.boundary_order;
  pair.periodic = false;

  Field h = Field::Constant(n, dx);
  for (int i = 0; i < s; ++i) {
    h[i] = coeffs.h_boundary[i] * dx;
    h[n - 1 - i] = coeffs.h_boundary[i] * dx;
  }
  pair.norm.weights = h;

  Eigen::MatrixXd Dm = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < s; ++i) {
    const auto& row = coeffs.d_minus_boundary[i];
    if (static_cast<int>(row.size()) > n)
      throw std::invalid_argument(coeffs.name + ": boundary row wider than grid");
    for (size_t j = 0; j < row.size(); ++j) Dm(i, j) = row[j] / dx;
  }
  int span_m = 0;
  for (int o : coeffs.d_minus_interior_offsets) span_m = std::max(span_m, std::abs(o));
  for (int i = s; i < n - s; ++i) {
    for (size_t k = 0; k < coeffs.d_minus_interior_offsets.size(); ++k) {
      const int j = i + coeffs.d_minus_interior_offsets[k];
      if (j < 0 || j >= n)
        throw std::invalid_argument(coeffs.name + ": interior stencil leaves the grid");
      Dm(i, j) = coeffs.d_minus_interior_weights[k] / dx;
    }
  }
  // Right closure from the left one: with mirrored H the SBP relation
  // Q- + Q+^T = B forces (D-)_{n+1-p, n+1-q} = (h_q (D-)_{q,p} - B_{q,p}) / h_p.
  for (int p = 1; p <= s; ++p) {
    for (int q = 1; q <= std::min(n, 2 * s + 2 * span_m); ++q) {
      double val = h[q - 1] * Dm(q - 1, p - 1);
      if (p == 1 && q == 1) val += 1.0;  // B_{11} = -1
      Dm(n - p, n - q) = val / h[p - 1];
    }
  }

  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);
  B(0, 0) = -1.0;
  B(n - 1, n - 1) = 1.0;
  Eigen::MatrixXd Qm = h.matrix().asDiagonal() * Dm;
  Eigen::MatrixXd Dp = h.cwiseInverse().matrix().asDiagonal() * (B - Qm.transpose());

  const double scale = 1.0 / dx;
  pair.d_minus = extract_banded(Dm, scale);
  pair.d_plus = extract_banded(Dp, scale);
  pair.central = extract_banded(0.5 * (Dm + Dp), scale);
  pair.upwind = extract_banded(0.5 * (Dp - Dm), scale);

  auto report = verify_pair(pair);
  if (!report.pass)
    throw VerificationError("operator '" + coeffs.name + "' failed verification:\n" +
                            report.to_string());
  return pair;
}

DpOperatorPair build_order2_pair(const Grid1D& grid) {
  if (grid.n < 8) throw std::invalid_argument("build_order2_pair: need at least 8 points");
  return assemble_pair(dp2_coefficients(), grid);
}

DpOperatorPair make_periodic(const DpOperatorPair& pair) {
  if (pair.periodic) throw std::invalid_argument("make_periodic: pair is already periodic");
  DpOperatorPair out = pair;
  out.periodic = true;
  const int n = pair.grid.n;
  const double c0 = 0.5 / pair.norm.weights[0];
  const double cN = 0.5 / pair.norm.weights[n - 1];
  out.d_minus.pen0 += c0;
  out.d_minus.penN += cN;
  out.d_plus.pen0 += c0;
  out.d_plus.penN += cN;
  out.central.pen0 += c0;
  out.central.penN += cN;
  // the penalties cancel in 0.5*(D+ - D-); upwind is unchanged
  return out;
}

DpOperatorPair build_operator(const std::string& id, const Grid1D& grid, bool periodic) {
  DpOperatorPair pair;
  if (id == "builtin:dp2" || id == "dp2") {
    pair = build_order2_pair(grid);
  } else if (id == "builtin:trad2" || id == "trad2") {
    pair = assemble_pair(trad2_coefficients(), grid);
  } else {
    std::string path = id;
    if (path.rfind("file:", 0) == 0) path = path.substr(5);
    pair = assemble_pair(load_coefficients(path), grid);
  }
  return periodic ? make_periodic(pair) : pair;
}

Field apply_1d(const DpOperatorPair& pair, OpKind kind, const Field& f) {
  if (f.size() != pair.grid.n) throw std::invalid_argument("apply_1d: size mismatch");
  return pair.op(kind).apply(f);
}

double inner_product(const DiagonalNorm& norm, const Field& f, const Field& g) {
  if (f.size() != norm.weights.size() || g.size() != norm.weights.size())
    throw std::invalid_argument("inner_product: size mismatch");
  double acc = 0.0;
  for (Eigen::Index j = 0; j < f.size(); ++j) acc += norm.weights[j] * f[j] * g[j];
  return acc;
}

double inner_product(const DiagonalNorm& nx, const DiagonalNorm& ny, const Field& f,
                     const Field& g) {
  const long nxs = nx.weights.size(), nys = ny.weights.size();
  if (f.size() != nxs * nys || g.size() != nxs * nys)
    throw std::invalid_argument("inner_product 2d: size mismatch");
  double acc = 0.0;
  long k = 0;
  for (long ix = 0; ix < nxs; ++ix) {
    const double wx = nx.weights[ix];
    for (long iy = 0; iy < nys; ++iy, ++k) acc += wx * ny.weights[iy] * f[k] * g[k];
  }
  return acc;
}

}  // namespace dpsbp

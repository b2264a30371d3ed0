#include "dpsbp/verify.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>

#include "dpsbp/operator_pair.hpp"

namespace dpsbp {

namespace {

// Highest degree with residual within tolerance, requiring all lower
// degrees to pass as well.
int measured_order(const std::vector<double>& residuals, double tol) {
  int order = -1;
  for (size_t d = 0; d < residuals.size(); ++d) {
    if (residuals[d] <= tol)
      order = static_cast<int>(d);
    else
      break;
  }
  return order;
}

}  // namespace

VerificationReport verify_pair(const DpOperatorPair& pair, VerifyTolerances tol) {
  VerificationReport r;
  const int n = pair.grid.n;
  const double dx = pair.grid.dx;
  r.name = pair.name;
  r.n = n;
  r.dx = dx;
  r.periodic = pair.periodic;
  r.declared_boundary_order = pair.boundary_order;
  r.declared_interior_order = pair.interior_order;

  // (B.1) positive measure consistent with the domain length
  r.min_h = pair.norm.weights.minCoeff();
  r.quadrature_error = std::abs(pair.norm.sum() - pair.grid.length) / pair.grid.length;

  Eigen::MatrixXd Dm = pair.dense(OpKind::Minus);
  Eigen::MatrixXd Dp = pair.dense(OpKind::Plus);
  Eigen::MatrixXd H = pair.norm.weights.matrix().asDiagonal();

  // (B.3) Q- + Q+^T = B, or = 0 once the periodic penalty is folded in
  Eigen::MatrixXd S = H * Dm + (H * Dp).transpose();
  if (!pair.periodic) {
    S(0, 0) += 1.0;
    S(n - 1, n - 1) -= 1.0;
  }
  r.sbp_residual = S.cwiseAbs().maxCoeff() * dx;

  // (B.4) A = H (D+ - D-) symmetric negative semi-definite
  Eigen::MatrixXd A = H * (Dp - Dm);
  r.upwind_asymmetry = (A - A.transpose()).cwiseAbs().maxCoeff() * dx;
  Eigen::MatrixXd As = 0.5 * (A + A.transpose());
  if (n <= tol.eig_dense_limit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(As, Eigen::EigenvaluesOnly);
    r.upwind_max_eig = es.eigenvalues().maxCoeff() * dx;
  } else {
    r.eig_sampled = true;
    std::mt19937_64 rng(0x5b9d);
    std::normal_distribution<double> dist;
    double worst = -1e300;
    Eigen::VectorXd g(n);
    for (int s = 0; s < tol.eig_samples; ++s) {
      for (int i = 0; i < n; ++i) g[i] = dist(rng);
      worst = std::max(worst, g.dot(As * g) / g.squaredNorm());
    }
    r.upwind_max_eig = worst * dx;
  }

  // (B.2) polynomial exactness in unit-scale coordinates xi = (x - x0)/L.
  // Rows 0 and n-1 of a periodic pair carry the penalty and are excluded
  // (monomials are not periodic).
  const int max_deg = std::max(pair.interior_order, pair.boundary_order) + 2;
  const int s_top = static_cast<int>(pair.d_minus.top.size());
  const int s_bot = static_cast<int>(pair.d_minus.bottom.size());
  const double L = pair.grid.length;
  r.poly_residual_closure.assign(max_deg + 1, 0.0);
  r.poly_residual_interior.assign(max_deg + 1, 0.0);
  Field xi = (pair.grid.nodes - pair.grid.x_min) / L;
  for (int d = 0; d <= max_deg; ++d) {
    Field p = xi.pow(d);
    if (d == 0) p.setOnes();
    Field dp_exact = d == 0 ? Field::Zero(n) : Field(d / L * xi.pow(d - 1));
    if (d == 1) dp_exact = Field::Constant(n, 1.0 / L);
    for (OpKind k : {OpKind::Minus, OpKind::Plus}) {
      Field err = (pair.op(k).apply(p) - dp_exact).abs();
      for (int i = 0; i < n; ++i) {
        const bool closure = i < s_top || i >= n - s_bot;
        const bool penalty_row = pair.periodic && (i == 0 || i == n - 1);
        if (penalty_row) continue;
        auto& slot = closure ? r.poly_residual_closure[d] : r.poly_residual_interior[d];
        slot = std::max(slot, err[i] * dx);
      }
    }
  }
  r.measured_boundary_order = measured_order(r.poly_residual_closure, tol.polynomial);
  r.measured_interior_order = measured_order(r.poly_residual_interior, tol.polynomial);

  r.pass = true;
  std::ostringstream why;
  if (!(r.min_h > 0.0)) {
    r.pass = false;
    why << "(B.1) nonpositive H weight; ";
  }
  if (r.quadrature_error > tol.quadrature) {
    r.pass = false;
    why << "(B.1) quadrature sum residual " << r.quadrature_error << "; ";
  }
  if (r.sbp_residual > tol.sbp) {
    r.pass = false;
    why << "(B.3) SBP residual " << r.sbp_residual << "/dx; ";
  }
  if (r.upwind_asymmetry > tol.upwind_sym) {
    r.pass = false;
    why << "(B.4) A not symmetric, residual " << r.upwind_asymmetry << "/dx; ";
  }
  if (r.upwind_max_eig > tol.upwind_eig) {
    r.pass = false;
    why << "(B.4) A not negative semi-definite, max eig " << r.upwind_max_eig << "/dx; ";
  }
  if (r.measured_boundary_order < pair.boundary_order) {
    r.pass = false;
    why << "(B.2) boundary exactness " << r.measured_boundary_order << " < declared "
        << pair.boundary_order << "; ";
  }
  if (r.measured_interior_order < pair.interior_order) {
    r.pass = false;
    why << "(B.2) interior exactness " << r.measured_interior_order << " < declared "
        << pair.interior_order << "; ";
  }
  r.failure = why.str();
  return r;
}

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  os << "operator " << name << " on n=" << n << (periodic ? " (periodic)" : "") << "\n";
  os << "  min H weight        : " << min_h << "\n";
  os << "  quadrature residual : " << quadrature_error << " (relative)\n";
  os << "  SBP residual        : " << sbp_residual << " /dx\n";
  os << "  A asymmetry         : " << upwind_asymmetry << " /dx\n";
  os << "  A max eigenvalue    : " << upwind_max_eig << " /dx"
     << (eig_sampled ? " (sampled)" : "") << "\n";
  os << "  exactness closure   : measured " << measured_boundary_order << ", declared "
     << declared_boundary_order << " [";
  for (size_t d = 0; d < poly_residual_closure.size(); ++d)
    os << (d ? " " : "") << poly_residual_closure[d];
  os << "]\n";
  os << "  exactness interior  : measured " << measured_interior_order << ", declared "
     << declared_interior_order << " [";
  for (size_t d = 0; d < poly_residual_interior.size(); ++d)
    os << (d ? " " : "") << poly_residual_interior[d];
  os << "]\n";
  os << "  verdict             : " << (pass ? "PASS" : "FAIL " + failure) << "\n";
  return os.str();
}

}  // namespace dpsbp

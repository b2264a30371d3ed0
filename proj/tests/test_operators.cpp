#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "dpsbp/field_ops.hpp"
#include "dpsbp/operator_pair.hpp"
#include "dpsbp/verify.hpp"

using namespace dpsbp;

namespace {

// The printed order-2/3 dual-pairing triple on n = 8, dx = 1; the
// independent oracle for assembly.
Eigen::MatrixXd printed_dminus() {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(8, 8);
  D(0, 0) = -1;
  D(0, 1) = 1;
  D(1, 0) = -1;
  D(1, 1) = 1;
  for (int i = 2; i <= 5; ++i) {
    D(i, i - 2) = 0.5;
    D(i, i - 1) = -2.0;
    D(i, i) = 1.5;
  }
  D(6, 4) = 0.4;
  D(6, 5) = -1.6;
  D(6, 6) = 1.0;
  D(6, 7) = 0.2;
  D(7, 5) = 2.0;
  D(7, 6) = -5.0;
  D(7, 7) = 3.0;
  return D;
}

Eigen::MatrixXd printed_dplus() {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(8, 8);
  D(0, 0) = -3;
  D(0, 1) = 5;
  D(0, 2) = -2;
  D(1, 0) = -0.2;
  D(1, 1) = -1.0;
  D(1, 2) = 1.6;
  D(1, 3) = -0.4;
  for (int i = 2; i <= 5; ++i) {
    D(i, i) = -1.5;
    D(i, i + 1) = 2.0;
    D(i, i + 2) = -0.5;
  }
  D(6, 6) = -1;
  D(6, 7) = 1;
  D(7, 6) = -1;
  D(7, 7) = 1;
  return D;
}

Field printed_h_weights() {
  Field h(8);
  h << 0.25, 1.25, 1, 1, 1, 1, 1.25, 0.25;
  return h;
}

}  // namespace

TEST_SUITE_BEGIN("operators");

TEST_CASE("grid spacing and nodes") {
  Grid1D g(65, 2.5, -1.0);
  CHECK(g.dx == doctest::Approx(2.5 / 64).epsilon(1e-15));
  CHECK(g.nodes[0] == -1.0);
  CHECK(g.nodes[64] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(std::abs(g.dx * (g.n - 1) - g.length) <= 4 * std::numeric_limits<double>::epsilon() * g.length);
  for (int i = 1; i < g.n; ++i) CHECK(g.nodes[i] > g.nodes[i - 1]);
  CHECK_THROWS(Grid1D(1, 1.0, 0.0));
  CHECK_THROWS(Grid1D(8, -1.0, 0.0));
}

TEST_CASE("order-2 pair reproduces the printed blocks") {
  Grid1D grid(8, 7.0, 0.0);  // dx = 1
  auto pair = build_order2_pair(grid);
  Eigen::MatrixXd Dm = pair.dense(OpKind::Minus);
  Eigen::MatrixXd Dp = pair.dense(OpKind::Plus);
  CHECK((Dm - printed_dminus()).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((Dp - printed_dplus()).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK((pair.norm.weights - printed_h_weights()).abs().maxCoeff() <= 1e-15);
  CHECK(pair.norm.weights[0] == 0.25);
  CHECK(pair.norm.weights[1] == 1.25);
  CHECK(Dm(0, 0) == -1.0);
  CHECK(Dm(2, 2) == 1.5);
  CHECK(Dp(0, 0) == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(Dp(0, 1) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("derivative of constants and of x") {
  Grid1D grid(16, 1.0, 0.0);
  auto pair = build_order2_pair(grid);
  Field one = Field::Ones(16);
  CHECK(pair.d_minus.apply(one).abs().maxCoeff() == 0.0);
  CHECK(pair.d_plus.apply(one).abs().maxCoeff() == 0.0);
  Field x = grid.nodes;
  CHECK((pair.d_minus.apply(x) - 1.0).abs().maxCoeff() <= 1e-13);
  CHECK((pair.d_plus.apply(x) - 1.0).abs().maxCoeff() <= 1e-13);
}

TEST_CASE("grid too small is rejected") {
  CHECK_THROWS_AS(build_order2_pair(Grid1D(7, 1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("interior stencil must annihilate constants") {
  auto coeffs = dp2_coefficients();
  coeffs.d_minus_interior_weights = {0.5, -2.0, 1.6};
  CHECK_THROWS_WITH_AS(assemble_pair(coeffs, Grid1D(16, 1.0, 0.0)),
                       doctest::Contains("annihilate"), std::runtime_error);
}

TEST_CASE("traditional order-2 operator yields D+ = D- and A = 0") {
  Grid1D grid(32, 1.0, 0.0);
  auto pair = assemble_pair(trad2_coefficients(), grid);
  Eigen::MatrixXd Dm = pair.dense(OpKind::Minus);
  Eigen::MatrixXd Dp = pair.dense(OpKind::Plus);
  CHECK((Dp - Dm).cwiseAbs().maxCoeff() <= 1e-13 / grid.dx);
  auto report = verify_pair(pair);
  CHECK(report.pass);
  CHECK(std::abs(report.upwind_max_eig) <= 1e-13);
}

TEST_CASE("verify_pair accepts dp2 and reports measured orders") {
  for (int n : {16, 64, 256}) {
    Grid1D grid(n, 1.0, 0.0);
    auto report = verify_pair(build_order2_pair(grid));
    CAPTURE(n);
    CHECK(report.pass);
    CHECK(report.sbp_residual <= 1e-12);
    CHECK(report.upwind_asymmetry <= 1e-12);
    CHECK(report.upwind_max_eig <= 1e-10);
    CHECK(report.measured_boundary_order == 1);
    CHECK(report.measured_interior_order == 2);
    CHECK(report.quadrature_error <= 1e-12);
  }
}

TEST_CASE("swapping D+ and D- breaks the upwind sign") {
  Grid1D grid(32, 1.0, 0.0);
  auto pair = build_order2_pair(grid);
  std::swap(pair.d_minus, pair.d_plus);
  auto report = verify_pair(pair);
  CHECK_FALSE(report.pass);
  CHECK(report.upwind_max_eig > 1e-6);  // A becomes positive semi-definite
  CHECK(report.failure.find("B.4") != std::string::npos);
}

TEST_CASE("periodic penalty closure") {
  Grid1D grid(32, 1.0, 0.0);
  auto base = build_order2_pair(grid);
  auto pair = make_periodic(base);
  CHECK(pair.periodic);
  CHECK_THROWS_AS(make_periodic(pair), std::invalid_argument);

  SUBCASE("penalty vanishes for periodic data") {
    Field f = sample(grid, [](double x) { return std::sin(2 * M_PI * x); });
    f[grid.n - 1] = f[0];
    Field d0 = base.d_minus.apply(f);
    Field d1 = pair.d_minus.apply(f);
    CHECK((d1 - d0).abs().maxCoeff() <= 1e-13 / grid.dx);
  }

  SUBCASE("B_N action on the endpoint jump") {
    // f = (2, 0, ..., 0, -1): B_N f has 3/2 at both ends and 0 inside
    Field f = Field::Zero(grid.n);
    f[0] = 2.0;
    f[grid.n - 1] = -1.0;
    Field diff = pair.d_minus.apply(f) - base.d_minus.apply(f);
    CHECK(diff[0] * base.norm.weights[0] == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(diff[grid.n - 1] * base.norm.weights[grid.n - 1] ==
          doctest::Approx(1.5).epsilon(1e-14));
    for (int i = 1; i < grid.n - 1; ++i) CHECK(diff[i] == 0.0);
  }

  SUBCASE("adjoint identity for random fields") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> dist;
    for (int trial = 0; trial < 100; ++trial) {
      Field f(grid.n), g(grid.n);
      for (int i = 0; i < grid.n; ++i) {
        f[i] = dist(rng);
        g[i] = dist(rng);
      }
      const double lhs = inner_product(pair.norm, pair.d_plus.apply(f), g) +
                         inner_product(pair.norm, f, pair.d_minus.apply(g));
      const double scale = std::sqrt(inner_product(pair.norm, f, f)) *
                           std::sqrt(inner_product(pair.norm, g, g));
      CHECK(std::abs(lhs) <= 1e-12 * scale);
    }
  }

  SUBCASE("periodic pair verifies, constants map to zero") {
    auto report = verify_pair(pair);
    CHECK(report.pass);
    CHECK(report.sbp_residual <= 1e-12);
    Field one = Field::Ones(grid.n);
    CHECK(pair.d_minus.apply(one).abs().maxCoeff() <= 1e-14);
    CHECK(pair.d_plus.apply(one).abs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("central equals the mean of the pair; sampling path for large n") {
  Grid1D grid(40, 1.0, 0.0);
  auto pair = make_periodic(build_order2_pair(grid));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> dist;
  Field f(grid.n);
  for (int i = 0; i < grid.n; ++i) f[i] = dist(rng);
  Field mean = 0.5 * (pair.d_minus.apply(f) + pair.d_plus.apply(f));
  CHECK((pair.central.apply(f) - mean).abs().maxCoeff() <= 1e-12 / grid.dx);

  // above the dense-eigensolver limit the upwind check falls back to
  // random quadratic-form sampling
  auto big = verify_pair(build_order2_pair(Grid1D(600, 1.0, 0.0)));
  CHECK(big.pass);
  CHECK(big.eig_sampled);
  CHECK(big.upwind_max_eig <= 1e-10);
}

TEST_CASE("central operator satisfies the traditional SBP identity") {
  for (int n : {16, 64}) {
    Grid1D grid(n, 1.0, 0.0);
    auto pair = build_order2_pair(grid);
    Eigen::MatrixXd Dc = pair.dense(OpKind::Central);
    Eigen::MatrixXd H = pair.norm.weights.matrix().asDiagonal();
    Eigen::MatrixXd S = H * Dc + (H * Dc).transpose();
    S(0, 0) += 1.0;
    S(n - 1, n - 1) -= 1.0;
    CHECK(S.cwiseAbs().maxCoeff() <= 1e-12 / grid.dx);
  }
}

TEST_CASE("central differentiates x^2 exactly at interior nodes") {
  Grid1D grid(24, 1.0, 0.0);
  auto pair = build_order2_pair(grid);
  Field x2 = grid.nodes * grid.nodes;
  Field d = pair.central.apply(x2);
  for (int i = 2; i < grid.n - 2; ++i)
    CHECK(d[i] == doctest::Approx(2.0 * grid.nodes[i]).epsilon(1e-12));
  // D+ - D- annihilates polynomials both operators differentiate exactly
  Field x = grid.nodes;
  CHECK((pair.d_plus.apply(x) - pair.d_minus.apply(x)).abs().maxCoeff() <= 1e-12);
}

TEST_CASE("convergence order of d_minus on a smooth field") {
  double prev_err = 0.0;
  std::vector<double> errs;
  for (int n : {128, 256}) {
    Grid1D grid(n + 1, 1.0, 0.0);
    auto pair = make_periodic(build_order2_pair(grid));
    Field f = sample(grid, [](double x) { return std::sin(2 * M_PI * x); });
    Field dfe = sample(grid, [](double x) { return 2 * M_PI * std::cos(2 * M_PI * x); });
    errs.push_back((pair.d_minus.apply(f) - dfe).abs().maxCoeff());
    (void)prev_err;
  }
  const double order = std::log2(errs[0] / errs[1]);
  CHECK(order >= 1.9);
}

TEST_CASE("apply_2d equals the dense Kronecker action") {
  Grid1D gx(16, 1.0, 0.0), gy(12, 0.7, -0.2);
  PairSet2D ops{Grid2D(gx, gy), make_periodic(build_order2_pair(gx)),
                make_periodic(build_order2_pair(gy))};
  std::mt19937_64 rng(21);
  std::normal_distribution<double> dist;
  Field f(ops.grid.size());
  for (long k = 0; k < f.size(); ++k) f[k] = dist(rng);

  for (OpKind kind : {OpKind::Minus, OpKind::Plus, OpKind::Central, OpKind::Upwind}) {
    Eigen::MatrixXd Dx = ops.px.dense(kind);
    Eigen::MatrixXd Dy = ops.py.dense(kind);
    Field fx = apply_2d(ops, Axis::X, kind, f);
    Field fy = apply_2d(ops, Axis::Y, kind, f);
    // x-major flat layout: (D ox I) f and (I ox D) f assembled by hand
    Field ref_x = Field::Zero(f.size()), ref_y = Field::Zero(f.size());
    for (int ix = 0; ix < 16; ++ix)
      for (int iy = 0; iy < 12; ++iy) {
        double ax = 0.0;
        for (int jx = 0; jx < 16; ++jx) ax += Dx(ix, jx) * f[ops.grid.flat(jx, iy)];
        ref_x[ops.grid.flat(ix, iy)] = ax;
        double ay = 0.0;
        for (int jy = 0; jy < 12; ++jy) ay += Dy(iy, jy) * f[ops.grid.flat(ix, jy)];
        ref_y[ops.grid.flat(ix, iy)] = ay;
      }
    CHECK((fx - ref_x).abs().maxCoeff() <= 1e-13 * Dx.cwiseAbs().maxCoeff());
    CHECK((fy - ref_y).abs().maxCoeff() <= 1e-13 * Dy.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("apply_2d of separable and axis-constant fields") {
  Grid1D gx(16, 1.0, 0.0), gy(14, 1.0, 0.0);
  PairSet2D ops{Grid2D(gx, gy), build_order2_pair(gx), build_order2_pair(gy)};
  Field fx = sample(ops.grid, [](double x, double) { return x; });
  Field dx = apply_2d(ops, Axis::X, OpKind::Central, fx);
  Field dy = apply_2d(ops, Axis::Y, OpKind::Central, fx);
  CHECK((dx - 1.0).abs().maxCoeff() <= 1e-12);
  CHECK(dy.abs().maxCoeff() <= 1e-12);
}

TEST_CASE("inner products") {
  Grid1D grid(64, 1.0, 0.0);
  auto pair = build_order2_pair(grid);
  Field one = Field::Ones(64);
  CHECK(inner_product(pair.norm, one, one) == doctest::Approx(1.0).epsilon(1e-12));
  Field x = grid.nodes;
  CHECK(inner_product(pair.norm, one, x) == doctest::Approx(0.5).epsilon(1e-12));

  Grid1D gy(48, 1.0, 0.0);
  PairSet2D ops{Grid2D(grid, gy), pair, build_order2_pair(gy)};
  Field one2 = Field::Ones(ops.grid.size());
  CHECK(inner_product(ops, one2, one2) == doctest::Approx(1.0).epsilon(1e-12));

  Grid1D gl(32, 2.5, 0.0);
  auto pl = build_order2_pair(gl);
  CHECK(pl.norm.sum() == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("coefficient file round trip") {
  auto coeffs = load_coefficients(std::string(DPSBP_SOURCE_DIR) + "/data/operators/dp2.txt");
  CHECK(coeffs.name == "dp2");
  CHECK(coeffs.interior_order == 2);
  CHECK(coeffs.boundary_order == 1);
  Grid1D grid(8, 7.0, 0.0);
  auto pair = assemble_pair(coeffs, grid);
  CHECK((pair.dense(OpKind::Plus) - printed_dplus()).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK((pair.dense(OpKind::Minus) - printed_dminus()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("coefficient text parsing accepts rationals and rejects junk") {
  auto c = parse_coefficients(
      "name = tiny\ninterior_order = 1\nboundary_order = 1\nclosure_width = 1\n"
      "h_boundary = 1/2\nd_minus_boundary = -1 1\n"
      "d_minus_interior_offsets = -1 1\nd_minus_interior_weights = -1/2 1/2\n");
  CHECK(c.h_boundary[0] == 0.5);
  CHECK(c.d_minus_interior_weights[0] == -0.5);
  CHECK_THROWS(parse_coefficients("name = x\nbogus_key = 1\n"));
  CHECK_THROWS(parse_coefficients(""));
  CHECK_THROWS(parse_coefficients("name = x\ninterior_order = q\n"));
}

TEST_SUITE_END();

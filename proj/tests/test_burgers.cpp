#include <doctest.h>

#include <random>

#include "dpsbp/diagnostics.hpp"
#include "dpsbp/models/burgers.hpp"

using namespace dpsbp;

namespace {
const SchemeVariant kVariants[] = {SchemeVariant::EntropyStable,
                                   SchemeVariant::EntropyConserving,
                                   SchemeVariant::LinearlyStable};
}

TEST_SUITE_BEGIN("burgers");

TEST_CASE("constant states are steady for every variant") {
  Grid1D grid(32, 1.0, 0.0);
  auto pair = make_periodic(build_order2_pair(grid));
  Field u = Field::Constant(grid.n, 3.0);
  for (auto v : kVariants) CHECK(burgers::rhs(pair, v, u).abs().maxCoeff() <= 1e-13);
}

TEST_CASE("mass neutrality and entropy rate identity") {
  Grid1D grid(48, 1.0, 0.0);
  auto pair = make_periodic(build_order2_pair(grid));
  std::mt19937_64 rng(5);
  Field one = Field::Ones(grid.n);
  for (int trial = 0; trial < 100; ++trial) {
    Field u = random_smooth_field(grid, rng, 0.0, 1.0);
    const double unrm = std::sqrt(inner_product(pair.norm, u, u));
    for (auto v : kVariants) {
      Field rate = burgers::rhs(pair, v, u);
      CHECK(std::abs(inner_product(pair.norm, one, rate)) <= 1e-12 * std::max(1.0, unrm));
    }
    // skew variants: <u, rate> equals the dissipation form exactly
    for (auto v : {SchemeVariant::EntropyStable, SchemeVariant::EntropyConserving}) {
      Field rate = burgers::rhs(pair, v, u);
      const double gamma = v == SchemeVariant::EntropyStable ? lf_gamma_burgers(u) : 0.0;
      const double expected = dissipation_form(pair, gamma, u);
      CHECK(std::abs(inner_product(pair.norm, u, rate) - expected) <=
            1e-12 * std::max(1.0, unrm * unrm));
      CHECK(expected <= 0.0);
      if (v == SchemeVariant::EntropyConserving) CHECK(expected == 0.0);
    }
  }
}

TEST_CASE("entropy totals") {
  Grid1D grid(256, 1.0, 0.0);
  auto pair = build_order2_pair(grid);
  CHECK(burgers::entropy_total(pair.norm, Field::Zero(grid.n)) == 0.0);
  Grid1D gl(64, 2.0, 0.0);
  auto pl = build_order2_pair(gl);
  CHECK(burgers::entropy_total(pl.norm, Field::Ones(gl.n)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  Field s = sample(grid, [](double x) { return std::sin(2 * M_PI * x); });
  CHECK(burgers::entropy_total(pair.norm, s) == doctest::Approx(0.25).epsilon(1e-6));
}

TEST_CASE("manufactured solution and forcing") {
  CHECK(burgers::mms_exact(0.0, 0.0) == 2.0);
  // forcing equals du/dt + u du/dx measured by finite differences
  const double eps = 1e-6;
  for (double x : {-0.8, -0.3, 0.1, 0.6}) {
    for (double t : {0.0, 0.4, 1.7}) {
      const double ut =
          (burgers::mms_exact(x, t + eps) - burgers::mms_exact(x, t - eps)) / (2 * eps);
      const double ux =
          (burgers::mms_exact(x + eps, t) - burgers::mms_exact(x - eps, t)) / (2 * eps);
      const double u = burgers::mms_exact(x, t);
      CHECK(burgers::mms_forcing(x, t) == doctest::Approx(ut + u * ux).epsilon(1e-7));
    }
  }
}

TEST_CASE("forced semi-discrete residual converges at the global order") {
  // || rhs(u*(t)) + s(t) - du*/dt ||_inf under refinement
  std::vector<double> res;
  const double t = 0.3;
  for (int n : {65, 129}) {
    Grid1D grid(n, 2.0, -1.0);
    auto pair = make_periodic(build_order2_pair(grid));
    Field u = sample(grid, [&](double x) { return burgers::mms_exact(x, t); });
    Field s = sample(grid, [&](double x) { return burgers::mms_forcing(x, t); });
    Field dudt(grid.n);
    const double eps = 1e-6;
    for (int i = 0; i < grid.n; ++i)
      dudt[i] = (burgers::mms_exact(grid.nodes[i], t + eps) -
                 burgers::mms_exact(grid.nodes[i], t - eps)) /
                (2 * eps);
    Field r = burgers::rhs(pair, SchemeVariant::EntropyConserving, u) + s - dudt;
    // interior rows; the closure rows carry the lower boundary order
    res.push_back(r.segment(2, grid.n - 4).abs().maxCoeff());
  }
  CHECK(std::log2(res[0] / res[1]) >= 1.8);
}

TEST_SUITE_END();

#include <doctest.h>

#include <cmath>
#include <memory>

#include "dpsbp/models/burgers.hpp"
#include "dpsbp/time_loop.hpp"

using namespace dpsbp;

namespace {

Problem scalar_problem(double lambda) {
  Problem p;
  p.rhs = [lambda](double, const State& u, State& rate) {
    rate.resize(1);
    rate[0] = lambda * u[0];
  };
  p.admissible = [](const State& u) { return u[0].isFinite().all(); };
  p.channels = {"value"};
  p.invariants = [](const State& u) { return std::vector<double>{u[0][0]}; };
  p.invariant_scales = p.invariants;
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("time_loop");

TEST_CASE("zero right-hand side leaves the state unchanged") {
  Problem p;
  p.rhs = [](double, const State& u, State& rate) {
    rate.resize(1);
    rate[0] = Field::Zero(u[0].size());
  };
  p.admissible = [](const State&) { return true; };
  p.channels = {};
  p.invariants = [](const State&) { return std::vector<double>{}; };
  p.invariant_scales = p.invariants;
  State u{Field::Constant(5, 3.25)};
  auto crash = rk_step(p, 0.0, 0.1, u);
  CHECK_FALSE(crash.has_value());
  // the convex recombination of identical stages is exact to rounding
  CHECK((u[0] - 3.25).abs().maxCoeff() <= 1e-14);
}

TEST_CASE("temporal order of convergence is at least 3.9") {
  auto p = scalar_problem(-1.0);
  auto solve = [&](double dt) {
    State u{Field::Constant(1, 1.0)};
    TimeLoopOptions opt;
    opt.dt = dt;
    opt.t_final = 1.0;
    run(p, u, opt);
    return u[0][0];
  };
  const double exact = std::exp(-1.0);
  const double e1 = std::abs(solve(0.1) - exact);
  const double e2 = std::abs(solve(0.05) - exact);
  CHECK(std::log2(e1 / e2) >= 3.9);
}

TEST_CASE("forced scalar problem retains fourth order") {
  // u' = -u + sin(3t): exercises the stage-time recursion
  Problem p;
  p.rhs = [](double t, const State& u, State& rate) {
    rate.resize(1);
    rate[0] = -u[0] + std::sin(3.0 * t);
  };
  p.admissible = [](const State&) { return true; };
  p.channels = {};
  p.invariants = [](const State&) { return std::vector<double>{}; };
  p.invariant_scales = p.invariants;
  auto solve = [&](double dt) {
    State u{Field::Constant(1, 1.0)};
    TimeLoopOptions opt;
    opt.dt = dt;
    opt.t_final = 1.0;
    run(p, u, opt);
    return u[0][0];
  };
  const double ref = solve(1.0 / 4096);
  const double e1 = std::abs(solve(1.0 / 16) - ref);
  const double e2 = std::abs(solve(1.0 / 32) - ref);
  CHECK(std::log2(e1 / e2) >= 3.9);
}

TEST_CASE("linear advection keeps the discrete norm non-increasing") {
  Grid1D grid(64, 1.0, 0.0);
  auto pair = std::make_shared<DpOperatorPair>(make_periodic(build_order2_pair(grid)));
  Problem p;
  p.rhs = [pair](double, const State& u, State& rate) {
    rate.resize(1);
    rate[0] = -pair->central.apply(u[0]) + upwind_dissipation(*pair, 1.0, u[0]);
  };
  p.admissible = [](const State& u) { return u[0].isFinite().all(); };
  p.channels = {"norm"};
  p.invariants = [pair](const State& u) {
    return std::vector<double>{inner_product(pair->norm, u[0], u[0])};
  };
  p.invariant_scales = p.invariants;
  State u{sample(grid, [](double x) { return std::sin(2 * M_PI * x); })};
  TimeLoopOptions opt;
  opt.dt = 0.1 * grid.dx;
  opt.t_final = 1.0;
  RunRecord rec = run(p, u, opt);
  REQUIRE_FALSE(rec.crashed);
  for (size_t r = 1; r < rec.series.rows(); ++r)
    CHECK(rec.series.values[r][0] <= rec.series.values[r - 1][0] * (1.0 + 1e-13));
}

TEST_CASE("landing exactness and step count") {
  auto p = scalar_problem(-0.3);
  State u{Field::Constant(1, 1.0)};
  TimeLoopOptions opt;
  opt.dt = 0.3;  // does not divide t_final
  opt.t_final = 1.0;
  RunRecord rec = run(p, u, opt);
  CHECK(rec.final_time == 1.0);
  CHECK(rec.steps == 4);
  CHECK(rec.series.times.back() == 1.0);
  CHECK(std::abs(u[0][0] - std::exp(-0.3)) <= 1e-4);
}

TEST_CASE("crash is recorded with a stage-local time") {
  Problem p;
  p.rhs = [](double t, const State& u, State& rate) {
    rate.resize(1);
    rate[0] = Field::Constant(u[0].size(), t > 0.5 ? std::nan("") : 1.0);
  };
  p.admissible = [](const State& u) { return u[0].isFinite().all(); };
  p.channels = {"value"};
  p.invariants = [](const State& u) { return std::vector<double>{u[0][0]}; };
  p.invariant_scales = p.invariants;
  State u{Field::Zero(4)};
  TimeLoopOptions opt;
  opt.dt = 0.2;
  opt.t_final = 2.0;
  RunRecord rec = run(p, u, opt);
  CHECK(rec.crashed);
  // the state fed by the first post-0.5 evaluation is the one flagged;
  // its stage-local time lies inside the step containing t = 0.5
  CHECK(rec.crash_time > 0.4);
  CHECK(rec.crash_time < 0.8);
  CHECK(rec.crash_time <= opt.t_final);
  CHECK(u[0].isFinite().all());  // the state was not clobbered
  for (size_t r = 0; r < rec.series.rows(); ++r)
    CHECK(std::isfinite(rec.series.values[r][0]));
}

TEST_CASE("identical runs produce identical series") {
  Grid1D grid(48, 1.0, 0.0);
  auto pair = std::make_shared<DpOperatorPair>(make_periodic(build_order2_pair(grid)));
  Problem p;
  p.rhs = [pair](double, const State& u, State& rate) {
    rate.resize(1);
    rate[0] = burgers::rhs(*pair, SchemeVariant::EntropyStable, u[0]);
  };
  p.admissible = [](const State& u) { return u[0].isFinite().all(); };
  p.channels = {"entropy"};
  p.invariants = [pair](const State& u) {
    return std::vector<double>{burgers::entropy_total(pair->norm, u[0])};
  };
  p.invariant_scales = p.invariants;
  auto once = [&] {
    State u{sample(grid, [](double x) { return std::exp(-50.0 * (x - 0.4) * (x - 0.4)); })};
    TimeLoopOptions opt;
    opt.dt = 0.1 * grid.dx;
    opt.t_final = 0.5;
    return run(p, u, opt);
  };
  RunRecord a = once(), b = once();
  REQUIRE(a.series.rows() == b.series.rows());
  for (size_t r = 0; r < a.series.rows(); ++r) {
    CHECK(a.series.times[r] == b.series.times[r]);
    CHECK(a.series.values[r][0] == b.series.values[r][0]);
  }
}

TEST_SUITE_END();

#include <doctest.h>

#include <random>

#include "dpsbp/diagnostics.hpp"
#include "dpsbp/probes.hpp"

using namespace dpsbp;

TEST_SUITE_BEGIN("diagnostics");

TEST_CASE("l2 error reference values") {
  Grid1D grid(256, 1.0, 0.0);
  auto pair = build_order2_pair(grid);
  Field zero = Field::Zero(grid.n);
  Field one = Field::Ones(grid.n);
  CHECK(l2_error(pair.norm, {one}, {one}) == 0.0);
  CHECK(l2_error(pair.norm, {one}, {zero}) == doctest::Approx(1.0).epsilon(1e-12));
  Field s = sample(grid, [](double x) { return std::sin(2 * M_PI * x); });
  CHECK(l2_error(pair.norm, {s}, {zero}) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
}

TEST_CASE("eoc formula") {
  auto t = eoc_table({32, 64}, {1.93e-3, 1.56e-4});
  CHECK_FALSE(t.rows[0].has_eoc);
  CHECK(t.rows[1].eoc == doctest::Approx(3.63).epsilon(0.01));

  t = eoc_table({32, 64}, {1e-2, 1.25e-3});
  CHECK(t.rows[1].eoc == doctest::Approx(3.0).epsilon(1e-12));

  t = eoc_table({10, 20}, {2.0, 1.0});
  CHECK(t.rows[1].eoc == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS(eoc_table({64, 32}, {1.0, 2.0}));
}

TEST_CASE("eoc is invariant under error rescaling") {
  std::vector<int> ns{16, 32, 64, 128};
  std::vector<double> errs{3.1e-2, 7.7e-3, 1.9e-3, 4.8e-4};
  auto a = eoc_table(ns, errs);
  for (auto& e : errs) e *= 137.5;
  auto b = eoc_table(ns, errs);
  for (size_t i = 1; i < ns.size(); ++i)
    CHECK(std::abs(a.rows[i].eoc - b.rows[i].eoc) <= 1e-13);
  CHECK(std::abs(a.ls_slope() - b.ls_slope()) <= 1e-13);
}

TEST_CASE("non-positive errors are flagged, not folded into eoc") {
  auto t = eoc_table({16, 32, 64}, {1e-3, 0.0, 1e-5});
  CHECK_FALSE(t.rows[1].has_eoc);
  CHECK_FALSE(t.rows[2].has_eoc);
}

TEST_CASE("random smooth fields respect the positivity offset") {
  Grid1D grid(64, 1.0, 0.0);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Field f = random_smooth_field(grid, rng, 2.0, 0.4);
    CHECK(f.minCoeff() > 0.5);
    CHECK(f.isFinite().all());
  }
  Grid2D g2(Grid1D(16, 1.0, 0.0), Grid1D(20, 1.0, 0.0));
  for (int trial = 0; trial < 20; ++trial) {
    Field f = random_smooth_field(g2, rng, 2.0, 0.3);
    CHECK(f.minCoeff() > 0.5);
  }
}

TEST_CASE("probe reports for every model and variant") {
  // trimmed trial counts keep this fast; the acceptance suite runs 100
  for (auto model : {ModelId::Burgers, ModelId::Swe1D, ModelId::Euler1D}) {
    for (auto v : {SchemeVariant::EntropyStable, SchemeVariant::EntropyConserving,
                   SchemeVariant::LinearlyStable}) {
      auto rep = probe_semidiscrete(model, v, "builtin:dp2", 48, 10, 99);
      CAPTURE(rep.model);
      CAPTURE(rep.variant);
      CHECK(rep.pass(1e-11));
    }
  }
  for (auto model : {ModelId::Swe2D, ModelId::Euler2D}) {
    for (auto v : {SchemeVariant::EntropyStable, SchemeVariant::EntropyConserving,
                   SchemeVariant::LinearlyStable}) {
      auto rep = probe_semidiscrete(model, v, "builtin:dp2", 16, 5, 99);
      CAPTURE(rep.model);
      CAPTURE(rep.variant);
      CHECK(rep.pass(1e-11));
    }
  }
  auto rep = probe_semidiscrete(ModelId::SweVecInv1D, SchemeVariant::EntropyConserving,
                                "builtin:dp2", 48, 10, 99);
  CHECK(rep.pass(1e-11));
  rep = probe_semidiscrete(ModelId::SweVecInv2D, SchemeVariant::EntropyConserving,
                           "builtin:dp2", 16, 5, 99);
  CHECK(rep.pass(1e-11));
}

TEST_CASE("model names round trip") {
  for (const char* name : {"burgers", "swe1d", "swe2d", "swe1d_vecinv", "swe2d_vecinv",
                           "euler1d", "euler2d"})
    CHECK(model_name(parse_model(name)) == std::string(name));
  CHECK_THROWS(parse_model("navier_stokes"));
}

TEST_SUITE_END();

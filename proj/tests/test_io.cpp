#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dpsbp/cli.hpp"
#include "dpsbp/config.hpp"
#include "dpsbp/outputs.hpp"
#include "dpsbp/scenarios.hpp"

using namespace dpsbp;

namespace {

std::string temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "dpsbp_test";
  std::filesystem::create_directories(dir);
  return dir.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli(std::vector<std::string> args) {
  std::vector<char*> argv;
  args.insert(args.begin(), "dpsbp");
  for (auto& a : args) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("config parsing, lists and overrides") {
  auto cfg = Config::from_string(
      "model = swe2d\n"
      "# comment line\n"
      "n = 64   # trailing comment\n"
      "cfl = 0.05\n"
      "scenario.g = 5\n"
      "resolutions = 32, 64, 128\n");
  CHECK(cfg.get("model") == "swe2d");
  CHECK(cfg.get_int("n", 0) == 64);
  CHECK(cfg.get_double("cfl", 0) == 0.05);
  CHECK(cfg.get_double("scenario.g", 0) == 5.0);
  CHECK(cfg.get_int_list("resolutions") == std::vector<int>{32, 64, 128});
  cfg.apply_override("n=128");
  CHECK(cfg.get_int("n", 0) == 128);
  CHECK_THROWS(cfg.get("missing"));
  CHECK_THROWS(Config::from_string("no equals sign here"));
}

TEST_CASE("diagnostics csv starts at zero and is byte-stable") {
  InvariantSeries s;
  s.start({"energy", "mass"}, {2.5, 1.0}, {2.5, 1.0});
  s.record(0.25, {2.4, 1.0});
  s.record(0.5, {2.3, 1.0 + 1e-15});
  const std::string dir = temp_dir();
  write_diagnostics_csv(dir + "/a.csv", s);
  write_diagnostics_csv(dir + "/b.csv", s);
  const std::string a = slurp(dir + "/a.csv");
  CHECK(a == slurp(dir + "/b.csv"));
  std::istringstream is(a);
  std::string header, first;
  std::getline(is, header);
  std::getline(is, first);
  CHECK(header == "time,energy,mass");
  CHECK(first == "0,0,0");
}

TEST_CASE("snapshot writers") {
  const std::string dir = temp_dir();
  Grid1D g1(8, 1.0, 0.0);
  State u{Field::LinSpaced(8, 0.0, 7.0)};
  write_snapshot_csv(dir + "/snap.csv", g1, {"u"}, u);
  auto text = slurp(dir + "/snap.csv");
  CHECK(text.rfind("x,u\n", 0) == 0);

  Grid2D g2(Grid1D(3, 1.0, 0.0), Grid1D(2, 1.0, 0.0));
  Field f(6);
  // flat x-major layout: f(ix, iy) = 10 ix + iy
  for (int ix = 0; ix < 3; ++ix)
    for (int iy = 0; iy < 2; ++iy) f[g2.flat(ix, iy)] = 10.0 * ix + iy;
  write_snapshot_vtk(dir + "/snap.vtk", g2, {"f"}, {f});
  auto vtk = slurp(dir + "/snap.vtk");
  CHECK(vtk.find("DATASET STRUCTURED_POINTS") != std::string::npos);
  CHECK(vtk.find("DIMENSIONS 3 2 1") != std::string::npos);
  CHECK(vtk.find("SCALARS f double 1") != std::string::npos);
  // x varies fastest: 0, 10, 20, 1, 11, 21
  CHECK(vtk.find("0\n10\n20\n1\n11\n21\n") != std::string::npos);
}

TEST_CASE("summary round trip") {
  RunRecord rec;
  rec.final_time = 1.25;
  rec.crashed = true;
  rec.crash_time = 1.1230000000000002;
  rec.steps = 37;
  rec.wall_seconds = 0.5;
  rec.series.start({"mass"}, {2.0}, {2.0});
  rec.series.record(1.1, {2.0 + 1e-13});
  const std::string dir = temp_dir();
  write_summary(dir + "/summary.txt", rec, {{"model", "burgers"}});
  auto kv = parse_summary(dir + "/summary.txt");
  CHECK(kv["model"] == "burgers");
  CHECK(std::stod(kv["final_time"]) == rec.final_time);
  CHECK(kv["crashed"] == "true");
  CHECK(std::stod(kv["crash_time"]) == rec.crash_time);
  CHECK(std::stol(kv["steps"]) == rec.steps);
  CHECK(std::stod(kv["rel_change_max.mass"]) == rec.series.relative(1, 0));
}

TEST_CASE("cli verify-operator") {
  CHECK(cli({"verify-operator", "builtin:dp2", "--quiet"}) == 0);
  CHECK(cli({"verify-operator", "builtin:trad2", "--quiet"}) == 0);
  CHECK(cli({"verify-operator", "no_such_file.txt"}) == 2);

  // structurally valid coefficients that break the upwind sign land in the
  // verifier, not in the parser: exit code 1 with the diagnostic report
  const std::string bad = temp_dir() + "/bad_op.txt";
  {
    std::ofstream out(bad);
    out << "name = broken\ninterior_order = 2\nboundary_order = 1\nclosure_width = 2\n"
        << "h_boundary = 1/4 5/4\nd_minus_boundary = -1 1 ; -2 2\n"
        << "d_minus_interior_offsets = -2 -1 0\nd_minus_interior_weights = 1/2 -2 3/2\n";
  }
  CHECK(cli({"verify-operator", bad, "--quiet"}) == 1);
}

TEST_CASE("cli run writes outputs and honours overrides") {
  const std::string dir = temp_dir() + "/run_burgers";
  std::filesystem::remove_all(dir);
  const std::string cfgpath = temp_dir() + "/burgers.cfg";
  {
    std::ofstream out(cfgpath);
    out << "model = burgers\nscenario = mms\nn = 32\nt_final = 0.25\n";
  }
  CHECK(cli({"run", "--config", cfgpath, "--out", dir}) == 0);
  CHECK(std::filesystem::exists(dir + "/diagnostics.csv"));
  CHECK(std::filesystem::exists(dir + "/summary.txt"));
  auto kv = parse_summary(dir + "/summary.txt");
  CHECK(kv["model"] == "burgers");
  CHECK(std::stod(kv["final_time"]) == 0.25);
  CHECK(kv.count("l2_error_final") == 1);
}

TEST_CASE("cli rejects bad configuration") {
  const std::string cfgpath = temp_dir() + "/bad.cfg";
  {
    std::ofstream out(cfgpath);
    out << "model = burgers\nscenario = no_such_scenario\n";
  }
  CHECK(cli({"run", "--config", cfgpath}) == 2);
  CHECK(cli({"run", "--config", "/nonexistent/path.cfg"}) == 2);
}

TEST_CASE("snapshots fire at the configured times") {
  const std::string dir = temp_dir() + "/snap_khi";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  RunSettings s;
  s.model = "euler2d";
  s.scenario = "khi";
  s.variant = SchemeVariant::EntropyStable;
  s.n = 16;
  s.t_final = 0.2;
  s.snapshot_times = {0.0, 0.1};
  s.snapshots_set = true;
  auto bp = build_problem(s);
  State u = bp.initial;
  auto rec = run(bp.problem, u, bp.options,
                 [&](double t, const State& st) { bp.write_snapshot(dir, t, st); });
  REQUIRE_FALSE(rec.crashed);
  int vtk_count = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".vtk") ++vtk_count;
  CHECK(vtk_count == 2);
}

TEST_CASE("vector-invariant model rejects dissipative variants") {
  RunSettings s;
  s.model = "swe1d_vecinv";
  s.scenario = "lake_at_rest";
  s.variant = SchemeVariant::EntropyStable;
  s.n = 32;
  CHECK_THROWS_AS(build_problem(s), std::invalid_argument);
  s.variant = SchemeVariant::EntropyConserving;
  CHECK_NOTHROW(build_problem(s));
}

TEST_SUITE_END();

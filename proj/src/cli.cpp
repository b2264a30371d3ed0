#include "dpsbp/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "dpsbp/outputs.hpp"
#include "dpsbp/probes.hpp"
#include "dpsbp/scenarios.hpp"
#include "dpsbp/verify.hpp"

namespace dpsbp {

namespace {

Config load_config(const std::string& path, const std::vector<std::string>& overrides,
                   const std::string& out_dir) {
  Config cfg = path.empty() ? Config() : Config::from_file(path);
  for (const auto& o : overrides) cfg.apply_override(o);
  if (!out_dir.empty()) cfg.set("out", out_dir);
  return cfg;
}

int cmd_verify(const std::string& id, const std::vector<int>& ns, bool quiet) {
  bool all_pass = true;
  for (int n : ns) {
    Grid1D grid(n, 1.0, 0.0);
    try {
      DpOperatorPair pair = build_operator(id, grid, false);
      auto report = verify_pair(pair);
      if (!quiet) std::cout << report.to_string();
      all_pass = all_pass && report.pass;
    } catch (const VerificationError& e) {
      std::cout << e.what() << "\n";
      all_pass = false;
    }
  }
  std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
  return all_pass ? 0 : 1;
}

int cmd_run(const Config& cfg) {
  RunSettings settings = RunSettings::from_config(cfg);
  BuiltProblem bp = build_problem(settings);
  ensure_directory(settings.out_dir);

  auto snapshot = [&](double t, const State& u) {
    bp.write_snapshot(settings.out_dir, t, u);
  };
  State u = bp.initial;
  RunRecord rec = run(bp.problem, u, bp.options, snapshot);

  write_diagnostics_csv(settings.out_dir + "/diagnostics.csv", rec.series);
  std::map<std::string, std::string> extra;
  extra["model"] = bp.model;
  extra["scenario"] = bp.scenario;
  extra["variant"] = bp.variant;
  extra["operator"] = bp.operator_id;
  extra["n"] = std::to_string(settings.n);
  extra["dt"] = format_double(bp.options.dt);
  if (bp.exact && !rec.crashed)
    extra["l2_error_final"] = format_double(bp.error_l2(u, bp.exact(rec.final_time)));
  write_summary(settings.out_dir + "/summary.txt", rec, extra);

  std::cout << "model=" << bp.model << " scenario=" << bp.scenario
            << " variant=" << bp.variant << " n=" << settings.n << "\n";
  if (rec.crashed)
    std::cout << "crashed at t=" << format_double(rec.crash_time) << " after " << rec.steps
              << " steps\n";
  else
    std::cout << "completed t=" << format_double(rec.final_time) << " in " << rec.steps
              << " steps (" << format_double(rec.wall_seconds) << " s)\n";
  std::cout << "outputs in " << settings.out_dir << "\n";
  return 0;
}

int cmd_convergence(const Config& cfg) {
  RunSettings base = RunSettings::from_config(cfg);
  std::vector<int> ns = cfg.get_int_list("resolutions");
  if (ns.empty()) ns = {32, 64, 128, 256};
  std::vector<std::string> variants = cfg.get_list("variants");
  if (variants.empty()) variants = {variant_name(base.variant)};
  ensure_directory(base.out_dir);

  std::vector<ConvergenceTable> tables;
  for (const auto& vname : variants) {
    std::vector<double> errors;
    for (int n : ns) {
      RunSettings s = base;
      s.n = n;
      s.variant = parse_variant(vname);
      BuiltProblem bp = build_problem(s);
      if (!bp.exact)
        throw std::runtime_error("convergence: scenario has no exact solution");
      State u = bp.initial;
      RunRecord rec = run(bp.problem, u, bp.options, nullptr);
      if (rec.crashed)
        throw std::runtime_error("convergence: run crashed at t=" +
                                 std::to_string(rec.crash_time));
      errors.push_back(bp.error_l2(u, bp.exact(rec.final_time)));
    }
    auto table = eoc_table(ns, errors, vname);
    tables.push_back(table);
    std::cout << vname << ":";
    for (const auto& r : table.rows) {
      std::cout << "  n=" << r.n << " e=" << format_double(r.error);
      if (r.has_eoc) std::cout << " eoc=" << format_double(r.eoc);
    }
    std::cout << "  slope=" << format_double(table.ls_slope()) << "\n";
  }
  write_convergence_csv(base.out_dir + "/convergence.csv", tables);
  return 0;
}

int cmd_probe(const Config& cfg) {
  std::vector<std::string> models = cfg.get_list("models");
  if (models.empty()) models = {cfg.get("model", "burgers")};
  std::vector<std::string> variants = cfg.get_list("variants");
  if (variants.empty()) variants = {cfg.get("variant", "entropy_stable")};
  const int trials = cfg.get_int("trials", 100);
  const int n = cfg.get_int("n", 64);
  const auto seed = static_cast<std::uint64_t>(cfg.get_long("seed", 1234));
  const std::string op = cfg.get("operator", "builtin:dp2");
  const double tol = cfg.get_double("tolerance", 1e-11);

  bool all_pass = true;
  for (const auto& m : models) {
    for (const auto& v : variants) {
      ModelId model = parse_model(m);
      SchemeVariant variant = parse_variant(v);
      const bool vecinv = model == ModelId::SweVecInv1D || model == ModelId::SweVecInv2D;
      if (vecinv && variant != SchemeVariant::EntropyConserving) continue;
      ProbeReport rep = probe_semidiscrete(model, variant, op, n, trials, seed);
      std::cout << rep.to_string();
      all_pass = all_pass && rep.pass(tol);
    }
  }
  std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
  return all_pass ? 0 : 1;
}

int cmd_crash_study(const Config& cfg) {
  RunSettings base = RunSettings::from_config(cfg);
  std::vector<int> ns = cfg.get_int_list("resolutions");
  if (ns.empty()) ns = {64};
  std::vector<std::string> variants = cfg.get_list("schemes");
  if (variants.empty())
    variants = {"entropy_stable", "entropy_conserving", "linearly_stable"};
  std::vector<std::string> operators = cfg.get_list("operators");
  if (operators.empty()) operators = {base.operator_id};
  ensure_directory(base.out_dir);

  std::vector<CrashCell> cells;
  for (const auto& vname : variants)
    for (const auto& op : operators)
      for (int n : ns) {
        RunSettings s = base;
        s.variant = parse_variant(vname);
        s.operator_id = op;
        s.n = n;
        BuiltProblem bp = build_problem(s);
        State u = bp.initial;
        RunRecord rec = run(bp.problem, u, bp.options, nullptr);
        CrashCell cell;
        cell.scheme = vname;
        cell.op = op;
        cell.n = n;
        cell.end_time = rec.crashed ? rec.crash_time : rec.final_time;
        cell.crashed = rec.crashed;
        cells.push_back(cell);
        std::cout << vname << " " << op << " n=" << n
                  << " end_time=" << format_double(cell.end_time)
                  << (cell.crashed ? " (crash)" : "") << "\n";
      }
  write_crash_csv(base.out_dir + "/crash_times.csv", cells);
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"dual-pairing upwind SBP solver framework"};
  app.require_subcommand(1);

  std::string op_id;
  std::vector<int> verify_ns{16, 64, 256};
  bool quiet = false;
  auto* verify = app.add_subcommand("verify-operator", "check the SBP assumptions");
  verify->add_option("operator", op_id, "builtin:dp2, builtin:trad2 or a coefficient file")
      ->required();
  verify->add_option("--n", verify_ns, "grid sizes");
  verify->add_flag("--quiet", quiet, "print only the verdict");

  std::string config_path, out_dir;
  std::vector<std::string> overrides;
  const char* descriptions[] = {"integrate one scenario", "resolution sweep with EOC",
                                "end-time matrix over schemes/operators/resolutions",
                                "semi-discrete conservation and entropy probes"};
  const char* names[] = {"run", "convergence", "crash-study", "probe"};
  for (int i = 0; i < 4; ++i) {
    auto* sub = app.add_subcommand(names[i], descriptions[i]);
    sub->add_option("--config", config_path, "configuration file");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--override", overrides, "key=value overrides")->take_all();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("verify-operator")) return cmd_verify(op_id, verify_ns, quiet);
    Config cfg = load_config(config_path, overrides, out_dir);
    if (app.got_subcommand("run")) return cmd_run(cfg);
    if (app.got_subcommand("convergence")) return cmd_convergence(cfg);
    if (app.got_subcommand("crash-study")) return cmd_crash_study(cfg);
    if (app.got_subcommand("probe")) return cmd_probe(cfg);
  } catch (const VerificationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace dpsbp

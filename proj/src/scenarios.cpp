#include "dpsbp/scenarios.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dpsbp/diagnostics.hpp"
#include "dpsbp/models/burgers.hpp"
#include "dpsbp/models/euler.hpp"
#include "dpsbp/models/swe.hpp"
#include "dpsbp/outputs.hpp"

namespace dpsbp {

SchemeVariant parse_variant(const std::string& s) {
  if (s == "entropy_stable") return SchemeVariant::EntropyStable;
  if (s == "entropy_conserving") return SchemeVariant::EntropyConserving;
  if (s == "linearly_stable") return SchemeVariant::LinearlyStable;
  throw std::invalid_argument("unknown scheme variant: " + s);
}

RunSettings RunSettings::from_config(const Config& cfg) {
  RunSettings s;
  s.model = cfg.get("model", s.model);
  s.scenario = cfg.get("scenario", s.scenario);
  s.variant = parse_variant(cfg.get("variant", "entropy_stable"));
  s.operator_id = cfg.get("operator", s.operator_id);
  s.n = cfg.get_int("n", s.n);
  s.cfl = cfg.get_double("cfl", s.cfl);
  s.t_final = cfg.get_double("t_final", s.t_final);
  s.diag_stride = cfg.get_long("diag_stride", s.diag_stride);
  if (cfg.has("snapshot_times")) {
    s.snapshot_times = cfg.get_double_list("snapshot_times");
    s.snapshots_set = true;
  }
  s.out_dir = cfg.get("out", s.out_dir);
  s.seed = static_cast<std::uint64_t>(cfg.get_long("seed", 1234));
  for (const auto& [k, v] : cfg.entries())
    if (k.rfind("scenario.", 0) == 0) s.params.set(k, v);
  return s;
}

namespace {

struct Defaults {
  double cfl = 0.1;
  double t_final = 2.0;
  std::vector<double> snapshots;
};

}  // namespace

double BuiltProblem::error_l2(const State& numeric, const State& reference) const {
  if (is2d) return dpsbp::l2_error(*ops, numeric, reference);
  return dpsbp::l2_error(pair->norm, numeric, reference);
}

std::string BuiltProblem::snapshot_path(const std::string& dir, double t) const {
  std::ostringstream name;
  name.precision(6);
  name << dir << "/snapshot_t" << t << (is2d ? ".vtk" : ".csv");
  return name.str();
}

void BuiltProblem::write_snapshot(const std::string& dir, double t, const State& u) const {
  const State out = snapshot_state(u);
  if (is2d)
    write_snapshot_vtk(snapshot_path(dir, t), grid2, snapshot_fields(), out);
  else
    write_snapshot_csv(snapshot_path(dir, t), grid1, snapshot_fields(), out);
}

namespace {

// ---- burgers --------------------------------------------------------

BuiltProblem build_burgers(const RunSettings& s, BuiltProblem&& bp, Defaults& d) {
  const bool mms = s.scenario == "mms";
  if (!mms && s.scenario != "gaussian")
    throw std::invalid_argument("burgers: unknown scenario " + s.scenario);
  Grid1D grid = mms ? Grid1D(s.n, 2.0, -1.0) : Grid1D(s.n, 1.0, 0.0);
  auto pair = std::make_shared<DpOperatorPair>(build_operator(s.operator_id, grid, true));
  bp.grid1 = grid;
  bp.pair = pair;
  bp.components = {"u"};
  d.cfl = 0.1;
  d.t_final = mms ? 2.0 : 1.0;
  if (!mms) d.snapshots = {0.0, 0.1, 0.3, 1.0};

  const SchemeVariant variant = s.variant;
  if (mms) {
    auto eval = [grid](double t) {
      return State{sample(grid, [t](double x) { return burgers::mms_exact(x, t); })};
    };
    bp.exact = eval;
    bp.initial = eval(0.0);
    bp.problem.rhs = [pair, variant, grid](double t, const State& u, State& rate) {
      rate.resize(1);
      rate[0] = burgers::rhs(*pair, variant, u[0]) +
                sample(grid, [t](double x) { return burgers::mms_forcing(x, t); });
    };
  } else {
    bp.initial = {sample(grid, [](double x) {
      return std::exp(-(x - 0.25) * (x - 0.25) / 0.01);
    })};
    bp.problem.rhs = [pair, variant](double, const State& u, State& rate) {
      rate.resize(1);
      rate[0] = burgers::rhs(*pair, variant, u[0]);
    };
  }
  bp.problem.admissible = [](const State& u) { return u[0].isFinite().all(); };
  bp.problem.channels = {"entropy", "mass"};
  bp.problem.invariants = [pair](const State& u) {
    return std::vector<double>{burgers::entropy_total(pair->norm, u[0]),
                               integral(pair->norm, u[0])};
  };
  bp.problem.invariant_scales = [pair](const State& u) {
    return std::vector<double>{burgers::entropy_total(pair->norm, u[0]),
                               integral(pair->norm, Field(u[0].abs()))};
  };
  return std::move(bp);
}

// ---- shallow water, flux form --------------------------------------

swe::Params swe_params_from(const RunSettings& s, double g_def, double f_def) {
  swe::Params p;
  p.g = s.params.get_double("scenario.g", g_def);
  p.f = s.params.get_double("scenario.f", f_def);
  return p;
}

BuiltProblem build_swe1d(const RunSettings& s, BuiltProblem&& bp, Defaults& d) {
  const bool mms = s.scenario == "mms";
  if (!mms && s.scenario != "lake_at_rest")
    throw std::invalid_argument("swe1d: unknown scenario " + s.scenario);
  Grid1D grid = mms ? Grid1D(s.n, 2.0, -1.0) : Grid1D(s.n, 25.0, 0.0);
  auto pair = std::make_shared<DpOperatorPair>(build_operator(s.operator_id, grid, true));
  bp.grid1 = grid;
  bp.pair = pair;
  bp.components = {"h", "hu"};
  auto params = std::make_shared<swe::Params>(swe_params_from(s, 9.81, 0.0));
  const SchemeVariant variant = s.variant;

  if (mms) {
    d.cfl = 0.02;
    d.t_final = 2.0;
    const double g = params->g;
    auto eval = [grid, g](double t) {
      Field h(grid.n), hu(grid.n);
      for (int i = 0; i < grid.n; ++i) {
        double hh, uu;
        swe::mms1d(grid.nodes[i], t, g, &hh, &uu, nullptr, nullptr);
        h[i] = hh;
        hu[i] = hh * uu;
      }
      return State{h, hu};
    };
    bp.exact = eval;
    bp.initial = eval(0.0);
    bp.problem.rhs = [pair, params, variant, grid, g](double t, const State& u, State& rate) {
      rate.resize(2);
      swe::rhs_flux_1d(*pair, *params, variant, u[0], u[1], rate[0], rate[1]);
      for (int i = 0; i < grid.n; ++i) {
        double hh, uu, sh, shu;
        swe::mms1d(grid.nodes[i], t, g, &hh, &uu, &sh, &shu);
        rate[0][i] += sh;
        rate[1][i] += shu;
      }
    };
  } else {
    d.cfl = 0.1;
    d.t_final = 20.0;
    params->b = sample(grid, swe::lake_topography);
    Field h0 = 0.5 - params->b;
    bp.initial = {h0, Field::Zero(grid.n)};
    State steady = bp.initial;
    bp.exact = [steady](double) { return steady; };
    bp.problem.rhs = [pair, params, variant](double, const State& u, State& rate) {
      rate.resize(2);
      swe::rhs_flux_1d(*pair, *params, variant, u[0], u[1], rate[0], rate[1]);
    };
  }
  bp.problem.admissible = [](const State& u) {
    return u[0].isFinite().all() && u[1].isFinite().all() && (u[0] > 0.0).all();
  };
  bp.problem.channels = {"energy", "mass", "momentum_x"};
  bp.problem.invariants = [pair, params](const State& u) {
    auto diag = swe::diagnostics_1d(*pair, *params, u[0], Field(u[1] / u[0]));
    return std::vector<double>{diag.energy, diag.mass, diag.momentum_x};
  };
  bp.problem.invariant_scales = [pair](const State& u) {
    return std::vector<double>{0.0, 0.0, integral(pair->norm, Field(u[1].abs()))};
  };
  return std::move(bp);
}

BuiltProblem build_swe2d(const RunSettings& s, BuiltProblem&& bp, Defaults& d) {
  double Lx, x0;
  swe::Params base;
  if (s.scenario == "mms") {
    Lx = 2.0;
    x0 = -1.0;
    base = swe_params_from(s, 9.81, 0.0);
    d.cfl = 0.02;
    d.t_final = 2.0;
  } else if (s.scenario == "merging_vortices") {
    Lx = 2.0 * M_PI;
    x0 = 0.0;
    base = swe_params_from(s, 5.0, 5.0);
    d.cfl = 0.02;
    d.t_final = 20.0;
    d.snapshots = {0.0, 3.0, 5.0, 10.0, 20.0};
  } else if (s.scenario == "barotropic_shear") {
    Lx = 4e7;
    x0 = 0.0;
    base = swe_params_from(s, 9.80616, 7.292e-5);
    d.cfl = 0.001;
    d.t_final = 5e6;
    d.snapshots = {0.0, 2e6, 3e6, 4e6, 5e6};
  } else {
    throw std::invalid_argument("swe2d: unknown scenario " + s.scenario);
  }
  Grid1D gx(s.n, Lx, x0);
  auto ops = std::make_shared<PairSet2D>(PairSet2D{
      Grid2D(gx, gx), build_operator(s.operator_id, gx, true),
      build_operator(s.operator_id, gx, true)});
  bp.grid2 = ops->grid;
  bp.ops = ops;
  bp.is2d = true;
  bp.components = {"h", "hu", "hv"};
  auto params = std::make_shared<swe::Params>(base);
  const SchemeVariant variant = s.variant;
  const Grid2D& g2 = ops->grid;

  if (s.scenario == "mms") {
    const double g = params->g;
    auto eval = [g2, g](double t) {
      Field h(g2.size()), u(g2.size()), v(g2.size());
      swe::mms2d_fields(g2, t, g, &h, &u, &v, nullptr, nullptr, nullptr);
      return State{h, Field(h * u), Field(h * v)};
    };
    bp.exact = eval;
    bp.initial = eval(0.0);
    bp.problem.rhs = [ops, params, variant, g2, g](double t, const State& u, State& rate) {
      rate.resize(3);
      swe::rhs_flux_2d(*ops, *params, variant, u[0], u[1], u[2], rate[0], rate[1], rate[2]);
      Field he(g2.size()), ue(g2.size()), ve(g2.size());
      Field sh(g2.size()), shu(g2.size()), shv(g2.size());
      swe::mms2d_fields(g2, t, g, &he, &ue, &ve, &sh, &shu, &shv);
      rate[0] += sh;
      rate[1] += shu;
      rate[2] += shv;
    };
  } else {
    Field h(g2.size()), hu(g2.size()), hv(g2.size());
    const double H = s.params.get_double("scenario.H", 8.0);
    swe::BarotropicParams bpar;
    bpar.L = Lx;
    for (int ix = 0; ix < g2.nx(); ++ix)
      for (int iy = 0; iy < g2.ny(); ++iy) {
        double hh, uu, vv;
        if (s.scenario == "merging_vortices")
          swe::merging_vortices_init(g2.x(ix), g2.y(iy), params->f, params->g, H, &hh, &uu, &vv);
        else
          swe::barotropic_shear_init(g2.x(ix), g2.y(iy), bpar, &hh, &uu, &vv);
        const long k = g2.flat(ix, iy);
        h[k] = hh;
        hu[k] = hh * uu;
        hv[k] = hh * vv;
      }
    bp.initial = {h, hu, hv};
    bp.problem.rhs = [ops, params, variant](double, const State& u, State& rate) {
      rate.resize(3);
      swe::rhs_flux_2d(*ops, *params, variant, u[0], u[1], u[2], rate[0], rate[1], rate[2]);
    };
  }
  bp.problem.admissible = [](const State& u) {
    for (const auto& f : u)
      if (!f.isFinite().all()) return false;
    return (u[0] > 0.0).all();
  };
  bp.problem.channels = {"energy", "mass", "momentum_x", "momentum_y", "vorticity",
                         "enstrophy"};
  bp.problem.invariants = [ops, params](const State& u) {
    auto diag =
        swe::diagnostics_2d(*ops, *params, u[0], Field(u[1] / u[0]), Field(u[2] / u[0]));
    return std::vector<double>{diag.energy, diag.mass,      diag.momentum_x,
                               diag.momentum_y, diag.vorticity, diag.enstrophy};
  };
  bp.problem.invariant_scales = [ops](const State& u) {
    return std::vector<double>{0.0,
                               0.0,
                               integral(*ops, Field(u[1].abs())),
                               integral(*ops, Field(u[2].abs())),
                               1.0,
                               0.0};
  };
  return std::move(bp);
}

// ---- shallow water, vector-invariant form --------------------------

BuiltProblem build_vecinv(const RunSettings& s, BuiltProblem&& bp, Defaults& d, bool two_d) {
  if (s.variant != SchemeVariant::EntropyConserving)
    throw std::invalid_argument(
        "the vector-invariant form supports only the entropy_conserving variant");
  if (!two_d) {
    if (s.scenario != "lake_at_rest")
      throw std::invalid_argument("swe1d_vecinv: unknown scenario " + s.scenario);
    Grid1D grid(s.n, 25.0, 0.0);
    auto pair = std::make_shared<DpOperatorPair>(build_operator(s.operator_id, grid, true));
    bp.grid1 = grid;
    bp.pair = pair;
    bp.components = {"h", "u"};
    d.cfl = 0.1;
    d.t_final = 20.0;
    auto params = std::make_shared<swe::Params>(swe_params_from(s, 9.81, 0.0));
    params->b = sample(grid, swe::lake_topography);
    bp.initial = {Field(0.5 - params->b), Field::Zero(grid.n)};
    State steady = bp.initial;
    bp.exact = [steady](double) { return steady; };
    bp.problem.rhs = [pair, params](double, const State& u, State& rate) {
      rate.resize(2);
      swe::rhs_vecinv_1d(*pair, *params, u[0], u[1], rate[0], rate[1]);
    };
    bp.problem.admissible = [](const State& u) {
      return u[0].isFinite().all() && u[1].isFinite().all() && (u[0] > 0.0).all();
    };
    bp.problem.channels = {"energy", "mass", "momentum_x"};
    bp.problem.invariants = [pair, params](const State& u) {
      auto diag = swe::diagnostics_1d(*pair, *params, u[0], u[1]);
      return std::vector<double>{diag.energy, diag.mass, diag.momentum_x};
    };
    bp.problem.invariant_scales = [pair](const State& u) {
      return std::vector<double>{0.0, 0.0,
                                 integral(pair->norm, Field((u[0] * u[1]).abs()))};
    };
    return std::move(bp);
  }
  if (s.scenario != "merging_vortices")
    throw std::invalid_argument("swe2d_vecinv: unknown scenario " + s.scenario);
  Grid1D gx(s.n, 2.0 * M_PI, 0.0);
  auto ops = std::make_shared<PairSet2D>(PairSet2D{Grid2D(gx, gx),
                                                   build_operator(s.operator_id, gx, true),
                                                   build_operator(s.operator_id, gx, true)});
  bp.grid2 = ops->grid;
  bp.ops = ops;
  bp.is2d = true;
  bp.components = {"h", "u", "v"};
  d.cfl = 0.05;
  d.t_final = 20.0;
  auto params = std::make_shared<swe::Params>(swe_params_from(s, 5.0, 5.0));
  const double H = s.params.get_double("scenario.H", 8.0);
  const Grid2D& g2 = ops->grid;
  Field h(g2.size()), u0(g2.size()), v0(g2.size());
  for (int ix = 0; ix < g2.nx(); ++ix)
    for (int iy = 0; iy < g2.ny(); ++iy) {
      double hh, uu, vv;
      swe::merging_vortices_init(g2.x(ix), g2.y(iy), params->f, params->g, H, &hh, &uu, &vv);
      const long k = g2.flat(ix, iy);
      h[k] = hh;
      u0[k] = uu;
      v0[k] = vv;
    }
  bp.initial = {h, u0, v0};
  bp.problem.rhs = [ops, params](double, const State& u, State& rate) {
    rate.resize(3);
    swe::rhs_vecinv_2d(*ops, *params, u[0], u[1], u[2], rate[0], rate[1], rate[2]);
  };
  bp.problem.admissible = [](const State& u) {
    for (const auto& f : u)
      if (!f.isFinite().all()) return false;
    return (u[0] > 0.0).all();
  };
  bp.problem.channels = {"energy", "mass", "momentum_x", "momentum_y", "vorticity",
                         "enstrophy"};
  bp.problem.invariants = [ops, params](const State& u) {
    auto diag = swe::diagnostics_2d(*ops, *params, u[0], u[1], u[2]);
    return std::vector<double>{diag.energy, diag.mass,      diag.momentum_x,
                               diag.momentum_y, diag.vorticity, diag.enstrophy};
  };
  bp.problem.invariant_scales = [ops](const State& u) {
    return std::vector<double>{0.0,
                               0.0,
                               integral(*ops, Field((u[0] * u[1]).abs())),
                               integral(*ops, Field((u[0] * u[2]).abs())),
                               1.0,
                               0.0};
  };
  return std::move(bp);
}

// ---- compressible Euler ---------------------------------------------

BuiltProblem build_euler1d(const RunSettings& s, BuiltProblem&& bp, Defaults& d) {
  if (s.scenario != "mms")
    throw std::invalid_argument("euler1d: unknown scenario " + s.scenario);
  Grid1D grid(s.n, 2.0, -1.0);
  auto pair = std::make_shared<DpOperatorPair>(build_operator(s.operator_id, grid, true));
  bp.grid1 = grid;
  bp.pair = pair;
  d.cfl = 0.1;
  d.t_final = 2.0;
  auto params = std::make_shared<euler::Params>();
  params->gamma_gas = s.params.get_double("scenario.gamma", 1.4);
  bp.gamma_gas = params->gamma_gas;
  const SchemeVariant variant = s.variant;
  const bool cons = variant == SchemeVariant::LinearlyStable;
  bp.components = cons ? std::vector<std::string>{"rho", "rho_u", "energy"}
                       : std::vector<std::string>{"sqrt_rho", "sqrt_rho_u", "sqrt_p"};

  const double gg = params->gamma_gas;
  auto eval = [grid, cons, gg](double t) {
    Field a(grid.n), b(grid.n), c(grid.n);
    for (int i = 0; i < grid.n; ++i) {
      double rho, u, p;
      euler::mms1d_primitive(grid.nodes[i], t, &rho, &u, &p);
      if (cons) {
        a[i] = rho;
        b[i] = rho * u;
        c[i] = p / (gg - 1.0) + 0.5 * rho * u * u;
      } else {
        a[i] = std::sqrt(rho);
        b[i] = std::sqrt(rho) * u;
        c[i] = std::sqrt(p);
      }
    }
    return State{a, b, c};
  };
  bp.exact = eval;
  bp.initial = eval(0.0);
  bp.problem.rhs = [pair, params, variant, grid, cons, gg](double t, const State& u,
                                                           State& rate) {
    rate.resize(3);
    if (cons)
      euler::rhs_cons_1d(*pair, *params, u[0], u[1], u[2], rate[0], rate[1], rate[2]);
    else
      euler::rhs_skew_1d(*pair, *params, variant, u[0], u[1], u[2], rate[0], rate[1],
                         rate[2]);
    for (int i = 0; i < grid.n; ++i) {
      double s0, s1, s2;
      if (cons)
        euler::mms1d_forcing_cons(grid.nodes[i], t, gg, &s0, &s1, &s2);
      else
        euler::mms1d_forcing_skew(grid.nodes[i], t, &s0, &s1, &s2);
      rate[0][i] += s0;
      rate[1][i] += s1;
      rate[2][i] += s2;
    }
  };
  if (cons) {
    bp.problem.admissible = [gg](const State& u) {
      for (const auto& f : u)
        if (!f.isFinite().all()) return false;
      if (!(u[0] > 0.0).all()) return false;
      Field p = (gg - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
      return (p > 0.0).all();
    };
  } else {
    bp.problem.admissible = [](const State& u) {
      for (const auto& f : u)
        if (!f.isFinite().all()) return false;
      return (u[0] > 0.0).all() && (u[2] > 0.0).all();
    };
  }
  bp.problem.channels = {"energy", "mass", "momentum_x", "thermo_entropy"};
  bp.problem.invariants = [pair, params, cons](const State& u) {
    Field rho, vel, press;
    double energy;
    if (cons) {
      rho = u[0];
      vel = u[1] / u[0];
      press = (params->gamma_gas - 1.0) * (u[2] - 0.5 * u[1] * vel);
      energy = integral(pair->norm, u[2]);
    } else {
      euler::skew_to_primitive(u[0], u[1], u[2], rho, vel, press);
      energy = euler::energy_total_1d(*pair, *params, u[0], u[1], u[2]);
    }
    return std::vector<double>{
        energy, integral(pair->norm, rho), integral(pair->norm, Field(rho * vel)),
        euler::thermo_entropy_total(*params, rho, press, pair->norm, nullptr)};
  };
  bp.problem.invariant_scales = [pair, params, cons](const State& u) {
    Field mom = cons ? Field(u[1]) : Field(u[0] * u[1]);
    return std::vector<double>{0.0, 0.0, integral(pair->norm, Field(mom.abs())), 1.0};
  };
  return std::move(bp);
}

BuiltProblem build_euler2d(const RunSettings& s, BuiltProblem&& bp, Defaults& d) {
  const bool vortex = s.scenario == "isentropic_vortex";
  if (!vortex && s.scenario != "khi")
    throw std::invalid_argument("euler2d: unknown scenario " + s.scenario);
  Grid1D gx = vortex ? Grid1D(s.n, 16.0, -8.0) : Grid1D(s.n, 2.0, -1.0);
  auto ops = std::make_shared<PairSet2D>(PairSet2D{Grid2D(gx, gx),
                                                   build_operator(s.operator_id, gx, true),
                                                   build_operator(s.operator_id, gx, true)});
  bp.grid2 = ops->grid;
  bp.ops = ops;
  bp.is2d = true;
  d.cfl = 0.05;
  d.t_final = vortex ? 16.0 : 10.0;
  if (!vortex) d.snapshots = {0.0, 3.9, 4.8, 5.5, 10.0};
  auto params = std::make_shared<euler::Params>();
  params->gamma_gas = s.params.get_double("scenario.gamma", 1.4);
  bp.gamma_gas = params->gamma_gas;
  const SchemeVariant variant = s.variant;
  const bool cons = variant == SchemeVariant::LinearlyStable;
  bp.components = cons
                      ? std::vector<std::string>{"rho", "rho_u", "rho_v", "energy"}
                      : std::vector<std::string>{"sqrt_rho", "sqrt_rho_u", "sqrt_rho_v",
                                                 "sqrt_p"};

  const Grid2D& g2 = ops->grid;
  const double gg = params->gamma_gas;
  auto params_copy = *params;
  auto eval = [g2, cons, gg, params_copy, vortex](double t) {
    Field a(g2.size()), b(g2.size()), c(g2.size()), e(g2.size());
    for (int ix = 0; ix < g2.nx(); ++ix)
      for (int iy = 0; iy < g2.ny(); ++iy) {
        double rho, u, v, p;
        if (vortex)
          euler::vortex_state(g2.x(ix), g2.y(iy), t, params_copy, &rho, &u, &v, &p);
        else
          euler::khi_state(g2.x(ix), g2.y(iy), &rho, &u, &v, &p);
        const long k = g2.flat(ix, iy);
        if (cons) {
          a[k] = rho;
          b[k] = rho * u;
          c[k] = rho * v;
          e[k] = p / (gg - 1.0) + 0.5 * rho * (u * u + v * v);
        } else {
          const double r = std::sqrt(rho);
          a[k] = r;
          b[k] = r * u;
          c[k] = r * v;
          e[k] = std::sqrt(p);
        }
      }
    return State{a, b, c, e};
  };
  if (vortex) bp.exact = eval;
  bp.initial = eval(0.0);
  bp.problem.rhs = [ops, params, variant, cons](double, const State& u, State& rate) {
    rate.resize(4);
    if (cons)
      euler::rhs_cons_2d(*ops, *params, u[0], u[1], u[2], u[3], rate[0], rate[1], rate[2],
                         rate[3]);
    else
      euler::rhs_skew_2d(*ops, *params, variant, u[0], u[1], u[2], u[3], rate[0], rate[1],
                         rate[2], rate[3]);
  };
  if (cons) {
    bp.problem.admissible = [gg](const State& u) {
      for (const auto& f : u)
        if (!f.isFinite().all()) return false;
      if (!(u[0] > 0.0).all()) return false;
      Field p = (gg - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0]);
      return (p > 0.0).all();
    };
  } else {
    bp.problem.admissible = [](const State& u) {
      for (const auto& f : u)
        if (!f.isFinite().all()) return false;
      return (u[0] > 0.0).all() && (u[3] > 0.0).all();
    };
  }
  bp.problem.channels = {"energy", "mass", "momentum_x", "momentum_y", "thermo_entropy"};
  bp.problem.invariants = [ops, params, cons](const State& u) {
    Field rho, uu, vv, press;
    double energy;
    if (cons) {
      rho = u[0];
      uu = u[1] / u[0];
      vv = u[2] / u[0];
      press = (params->gamma_gas - 1.0) * (u[3] - 0.5 * (u[1] * uu + u[2] * vv));
      energy = integral(*ops, u[3]);
    } else {
      rho = u[0] * u[0];
      uu = u[1] / u[0];
      vv = u[2] / u[0];
      press = u[3] * u[3];
      energy = euler::energy_total_2d(*ops, *params, u[0], u[1], u[2], u[3]);
    }
    return std::vector<double>{
        energy, integral(*ops, rho), integral(*ops, Field(rho * uu)),
        integral(*ops, Field(rho * vv)),
        euler::thermo_entropy_total(*params, rho, press, ops->px.norm, &ops->py.norm)};
  };
  bp.problem.invariant_scales = [ops, cons](const State& u) {
    Field mx = cons ? Field(u[1]) : Field(u[0] * u[1]);
    Field my = cons ? Field(u[2]) : Field(u[0] * u[2]);
    return std::vector<double>{0.0, 0.0, integral(*ops, Field(mx.abs())),
                               integral(*ops, Field(my.abs())), 1.0};
  };
  return std::move(bp);
}

}  // namespace

std::vector<std::string> BuiltProblem::snapshot_fields() const {
  if (model == "burgers") return {"u"};
  if (model.rfind("swe1d", 0) == 0) return {"h", "u"};
  if (model.rfind("swe2d", 0) == 0) return {"h", "u", "v"};
  if (model == "euler1d") return {"rho", "u", "p"};
  if (model == "euler2d") return {"rho", "u", "v", "p"};
  return components;
}

State BuiltProblem::snapshot_state(const State& u) const {
  if (model == "burgers") return u;
  if (model.rfind("swe", 0) == 0) {
    const bool vecinv = model.find("vecinv") != std::string::npos;
    State out{u[0]};
    for (size_t c = 1; c < u.size(); ++c)
      out.push_back(vecinv ? u[c] : Field(u[c] / u[0]));
    return out;
  }
  // euler: primitive fields for either state representation
  const bool cons = variant == "linearly_stable";
  const bool two = u.size() == 4;
  Field rho = cons ? u[0] : Field(u[0] * u[0]);
  Field uu = u[1] / u[0];
  Field press;
  if (cons) {
    Field ke = two ? Field(0.5 * (u[1] * uu + u[2] * (u[2] / u[0]))) : Field(0.5 * u[1] * uu);
    press = (gamma_gas - 1.0) * (u[two ? 3 : 2] - ke);
  } else {
    press = u[two ? 3 : 2] * u[two ? 3 : 2];
  }
  if (!two) return {rho, uu, press};
  return {rho, uu, Field(u[2] / u[0]), press};
}

BuiltProblem build_problem(const RunSettings& s) {
  BuiltProblem bp;
  bp.model = s.model;
  bp.scenario = s.scenario;
  bp.variant = variant_name(s.variant);
  bp.operator_id = s.operator_id;
  Defaults d;

  if (s.model == "burgers")
    bp = build_burgers(s, std::move(bp), d);
  else if (s.model == "swe1d")
    bp = build_swe1d(s, std::move(bp), d);
  else if (s.model == "swe2d")
    bp = build_swe2d(s, std::move(bp), d);
  else if (s.model == "swe1d_vecinv")
    bp = build_vecinv(s, std::move(bp), d, false);
  else if (s.model == "swe2d_vecinv")
    bp = build_vecinv(s, std::move(bp), d, true);
  else if (s.model == "euler1d")
    bp = build_euler1d(s, std::move(bp), d);
  else if (s.model == "euler2d")
    bp = build_euler2d(s, std::move(bp), d);
  else
    throw std::invalid_argument("unknown model: " + s.model);

  const double dx = bp.is2d ? std::min(bp.grid2.gx.dx, bp.grid2.gy.dx) : bp.grid1.dx;
  const double cfl = s.cfl > 0.0 ? s.cfl : d.cfl;
  bp.options.dt = cfl * dx;
  bp.options.t_final = s.t_final >= 0.0 ? s.t_final : d.t_final;
  bp.options.diag_stride = s.diag_stride;
  bp.options.snapshot_times = s.snapshots_set ? s.snapshot_times : d.snapshots;
  return bp;
}

}  // namespace dpsbp

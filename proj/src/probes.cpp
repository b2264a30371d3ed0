#include "dpsbp/probes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dpsbp/diagnostics.hpp"
#include "dpsbp/models/burgers.hpp"
#include "dpsbp/models/euler.hpp"
#include "dpsbp/models/swe.hpp"
#include "dpsbp/operator_pair.hpp"

namespace dpsbp {

ModelId parse_model(const std::string& s) {
  if (s == "burgers") return ModelId::Burgers;
  if (s == "swe1d") return ModelId::Swe1D;
  if (s == "swe2d") return ModelId::Swe2D;
  if (s == "swe1d_vecinv") return ModelId::SweVecInv1D;
  if (s == "swe2d_vecinv") return ModelId::SweVecInv2D;
  if (s == "euler1d") return ModelId::Euler1D;
  if (s == "euler2d") return ModelId::Euler2D;
  throw std::invalid_argument("unknown model: " + s);
}

const char* model_name(ModelId m) {
  switch (m) {
    case ModelId::Burgers: return "burgers";
    case ModelId::Swe1D: return "swe1d";
    case ModelId::Swe2D: return "swe2d";
    case ModelId::SweVecInv1D: return "swe1d_vecinv";
    case ModelId::SweVecInv2D: return "swe2d_vecinv";
    case ModelId::Euler1D: return "euler1d";
    case ModelId::Euler2D: return "euler2d";
  }
  throw std::logic_error("bad ModelId");
}

bool ProbeReport::pass(double tol) const {
  if (max_conservation_residual > tol) return false;
  if (entropy_checked && max_entropy_residual > tol) return false;
  if (max_dissipation_form > tol) return false;
  return true;
}

std::string ProbeReport::to_string() const {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  os << model << " / " << variant << " (n=" << n << ", trials=" << trials << ")\n";
  os << "  max conservation residual : " << max_conservation_residual << "\n";
  if (entropy_checked)
    os << "  max entropy-rate residual : " << max_entropy_residual << "\n";
  os << "  max dissipation form      : " << max_dissipation_form
     << (max_dissipation_form <= 0.0 ? "  (non-positive)" : "  (POSITIVE)") << "\n";
  return os.str();
}

namespace {

struct Accum {
  ProbeReport rep;
  void conservation(double value, double scale) {
    rep.max_conservation_residual =
        std::max(rep.max_conservation_residual, std::abs(value) / std::max(scale, 1e-300));
  }
  void entropy(double residual, double scale) {
    rep.entropy_checked = true;
    rep.max_entropy_residual =
        std::max(rep.max_entropy_residual, std::abs(residual) / std::max(scale, 1e-300));
  }
  void dissipation(double form, double scale) {
    rep.max_dissipation_form =
        std::max(rep.max_dissipation_form, form / std::max(scale, 1e-300));
  }
};

double absdot(const DiagonalNorm& norm, const Field& a, const Field& b) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < a.size(); ++j)
    acc += norm.weights[j] * std::abs(a[j]) * std::abs(b[j]);
  return acc;
}

double absdot2(const PairSet2D& ops, const Field& a, const Field& b) {
  const auto& wx = ops.px.norm.weights;
  const auto& wy = ops.py.norm.weights;
  double acc = 0.0;
  long k = 0;
  for (long ix = 0; ix < wx.size(); ++ix)
    for (long iy = 0; iy < wy.size(); ++iy, ++k)
      acc += wx[ix] * wy[iy] * std::abs(a[k]) * std::abs(b[k]);
  return acc;
}

void probe_burgers(Accum& acc, const DpOperatorPair& pair, SchemeVariant variant,
                   int trials, std::mt19937_64& rng) {
  Field one = Field::Ones(pair.grid.n);
  for (int s = 0; s < trials; ++s) {
    Field u = random_smooth_field(pair.grid, rng, 0.0, 1.0);
    Field rate = burgers::rhs(pair, variant, u);
    acc.conservation(inner_product(pair.norm, one, rate), absdot(pair.norm, one, rate));
    const double gamma =
        variant == SchemeVariant::EntropyConserving ? 0.0 : lf_gamma_burgers(u);
    const double form = dissipation_form(pair, gamma, u);
    const double scale = absdot(pair.norm, u, rate) + std::abs(form);
    if (variant != SchemeVariant::LinearlyStable)
      acc.entropy(inner_product(pair.norm, u, rate) - form, scale);
    acc.dissipation(form, scale);
  }
}

void probe_swe1d(Accum& acc, const DpOperatorPair& pair, SchemeVariant variant, int trials,
                 std::mt19937_64& rng) {
  swe::Params p;
  Field one = Field::Ones(pair.grid.n);
  for (int s = 0; s < trials; ++s) {
    Field h = random_smooth_field(pair.grid, rng, 2.0, 0.4);
    Field u = random_smooth_field(pair.grid, rng, 0.0, 0.5);
    Field hu = h * u;
    Field rh, rhu;
    swe::rhs_flux_1d(pair, p, variant, h, hu, rh, rhu);
    acc.conservation(inner_product(pair.norm, one, rh), absdot(pair.norm, one, rh));
    acc.conservation(inner_product(pair.norm, one, rhu), absdot(pair.norm, one, rhu));
    if (variant == SchemeVariant::LinearlyStable) {
      const double g = lf_gamma_swe(h, u, p.g);
      double form = dissipation_form(pair, g, h) + dissipation_form(pair, g, hu);
      acc.dissipation(form, absdot(pair.norm, h, h) + absdot(pair.norm, hu, hu));
      continue;
    }
    std::array<double, 2> gamma{0.0, 0.0};
    if (variant == SchemeVariant::EntropyStable) gamma = swe::gamma_flux_1d(p, h, u);
    Field gv1 = swe::entropy_var_mass_1d(p, h, u);
    const double form =
        dissipation_form(pair, gamma[0], gv1) + dissipation_form(pair, gamma[1], u);
    const double lhs = inner_product(pair.norm, gv1, rh) + inner_product(pair.norm, u, rhu);
    const double scale =
        absdot(pair.norm, gv1, rh) + absdot(pair.norm, u, rhu) + std::abs(form);
    acc.entropy(lhs - form, scale);
    acc.dissipation(form, scale);
  }
}

void probe_swe2d(Accum& acc, const PairSet2D& ops, SchemeVariant variant, int trials,
                 std::mt19937_64& rng) {
  swe::Params p;
  Field one = Field::Ones(ops.grid.size());
  for (int s = 0; s < trials; ++s) {
    Field h = random_smooth_field(ops.grid, rng, 2.0, 0.3);
    Field u = random_smooth_field(ops.grid, rng, 0.0, 0.4);
    Field v = random_smooth_field(ops.grid, rng, 0.0, 0.4);
    Field hu = h * u, hv = h * v;
    Field rh, rhu, rhv;
    swe::rhs_flux_2d(ops, p, variant, h, hu, hv, rh, rhu, rhv);
    acc.conservation(inner_product(ops, one, rh), absdot2(ops, one, rh));
    acc.conservation(inner_product(ops, one, rhu), absdot2(ops, one, rhu));
    acc.conservation(inner_product(ops, one, rhv), absdot2(ops, one, rhv));
    if (variant == SchemeVariant::LinearlyStable) {
      const double gx = lf_gamma_swe(h, u, p.g);
      const double gy = lf_gamma_swe(h, v, p.g);
      double form = 0.0;
      for (const Field* f : {&h, &hu, &hv})
        form += dissipation_form(ops, Axis::X, gx, *f) + dissipation_form(ops, Axis::Y, gy, *f);
      acc.dissipation(form, absdot2(ops, h, h) + absdot2(ops, hu, hu) + absdot2(ops, hv, hv));
      continue;
    }
    std::array<double, 3> gx{0, 0, 0}, gy{0, 0, 0};
    if (variant == SchemeVariant::EntropyStable) {
      gx = swe::gamma_flux_2d(p, h, u, v, Axis::X);
      gy = swe::gamma_flux_2d(p, h, u, v, Axis::Y);
    }
    Field gv1 = swe::entropy_var_mass_2d(p, h, u, v);
    const Field* gvars[3] = {&gv1, &u, &v};
    double form = 0.0;
    for (int i = 0; i < 3; ++i)
      form += dissipation_form(ops, Axis::X, gx[i], *gvars[i]) +
              dissipation_form(ops, Axis::Y, gy[i], *gvars[i]);
    const double lhs = inner_product(ops, gv1, rh) + inner_product(ops, u, rhu) +
                       inner_product(ops, v, rhv);
    const double scale = absdot2(ops, gv1, rh) + absdot2(ops, u, rhu) +
                         absdot2(ops, v, rhv) + std::abs(form);
    acc.entropy(lhs - form, scale);
    acc.dissipation(form, scale);
  }
}

void probe_vecinv1d(Accum& acc, const DpOperatorPair& pair, int trials, std::mt19937_64& rng) {
  swe::Params p;
  Field one = Field::Ones(pair.grid.n);
  for (int s = 0; s < trials; ++s) {
    Field h = random_smooth_field(pair.grid, rng, 2.0, 0.4);
    Field u = random_smooth_field(pair.grid, rng, 0.0, 0.5);
    Field rh, ru;
    swe::rhs_vecinv_1d(pair, p, h, u, rh, ru);
    acc.conservation(inner_product(pair.norm, one, rh), absdot(pair.norm, one, rh));
    Field G = 0.5 * u * u + p.g * h;
    Field hu = h * u;
    const double lhs = inner_product(pair.norm, G, rh) + inner_product(pair.norm, hu, ru);
    acc.entropy(lhs, absdot(pair.norm, G, rh) + absdot(pair.norm, hu, ru));
    acc.dissipation(0.0, 1.0);
  }
}

void probe_vecinv2d(Accum& acc, const PairSet2D& ops, int trials, std::mt19937_64& rng) {
  swe::Params p;
  p.f = 5.0;  // the Coriolis term must stay entropy-neutral
  Field one = Field::Ones(ops.grid.size());
  for (int s = 0; s < trials; ++s) {
    Field h = random_smooth_field(ops.grid, rng, 2.0, 0.3);
    Field u = random_smooth_field(ops.grid, rng, 0.0, 0.4);
    Field v = random_smooth_field(ops.grid, rng, 0.0, 0.4);
    Field rh, ru, rv;
    swe::rhs_vecinv_2d(ops, p, h, u, v, rh, ru, rv);
    acc.conservation(inner_product(ops, one, rh), absdot2(ops, one, rh));
    Field G = 0.5 * (u * u + v * v) + p.g * h;
    Field hu = h * u, hv = h * v;
    const double lhs = inner_product(ops, G, rh) + inner_product(ops, hu, ru) +
                       inner_product(ops, hv, rv);
    acc.entropy(lhs, absdot2(ops, G, rh) + absdot2(ops, hu, ru) + absdot2(ops, hv, rv));
    acc.dissipation(0.0, 1.0);
  }
}

void probe_euler1d(Accum& acc, const DpOperatorPair& pair, SchemeVariant variant, int trials,
                   std::mt19937_64& rng) {
  euler::Params p;
  Field one = Field::Ones(pair.grid.n);
  for (int s = 0; s < trials; ++s) {
    Field rho = random_smooth_field(pair.grid, rng, 2.0, 0.4);
    Field u = random_smooth_field(pair.grid, rng, 0.0, 0.5);
    Field press = random_smooth_field(pair.grid, rng, 2.0, 0.4);
    if (variant == SchemeVariant::LinearlyStable) {
      Field mu = rho * u;
      Field en = press / (p.gamma_gas - 1.0) + 0.5 * rho * u * u;
      Field rr, rm, re;
      euler::rhs_cons_1d(pair, p, rho, mu, en, rr, rm, re);
      acc.conservation(inner_product(pair.norm, one, rr), absdot(pair.norm, one, rr));
      acc.conservation(inner_product(pair.norm, one, rm), absdot(pair.norm, one, rm));
      acc.conservation(inner_product(pair.norm, one, re), absdot(pair.norm, one, re));
      const double g = lf_gamma_euler(rho, u, press, p.gamma_gas);
      double form = dissipation_form(pair, g, rho) + dissipation_form(pair, g, mu) +
                    dissipation_form(pair, g, en);
      acc.dissipation(form, absdot(pair.norm, rho, rho) + absdot(pair.norm, mu, mu) +
                                absdot(pair.norm, en, en));
      continue;
    }
    Field r, m, q;
    euler::primitive_to_skew(rho, u, press, r, m, q);
    Field rr, rm, rq;
    euler::rhs_skew_1d(pair, p, variant, r, m, q, rr, rm, rq);
    // conserved quantities are quadratic in the square-root variables
    acc.conservation(2.0 * inner_product(pair.norm, r, rr), 2.0 * absdot(pair.norm, r, rr));
    acc.conservation(inner_product(pair.norm, m, rr) + inner_product(pair.norm, r, rm),
                     absdot(pair.norm, m, rr) + absdot(pair.norm, r, rm));
    std::array<double, 3> ga{0, 0, 0};
    if (variant == SchemeVariant::EntropyStable) ga = euler::gamma_skew(p, rho, u, press);
    const double form = dissipation_form(pair, ga[1], u) +
                        dissipation_form(pair, 2.0 * ga[2] / (p.gamma_gas - 1.0), q);
    Field ghat_q = 2.0 / (p.gamma_gas - 1.0) * q;
    const double lhs = 2.0 * inner_product(pair.norm, r, rr) +
                       inner_product(pair.norm, m, rm) + inner_product(pair.norm, ghat_q, rq);
    const double scale = 2.0 * absdot(pair.norm, r, rr) + absdot(pair.norm, m, rm) +
                         absdot(pair.norm, ghat_q, rq) + std::abs(form);
    acc.entropy(lhs - form, scale);
    acc.dissipation(form, scale);
  }
}

void probe_euler2d(Accum& acc, const PairSet2D& ops, SchemeVariant variant, int trials,
                   std::mt19937_64& rng) {
  euler::Params p;
  Field one = Field::Ones(ops.grid.size());
  for (int s = 0; s < trials; ++s) {
    Field rho = random_smooth_field(ops.grid, rng, 2.0, 0.3);
    Field u = random_smooth_field(ops.grid, rng, 0.0, 0.4);
    Field v = random_smooth_field(ops.grid, rng, 0.0, 0.4);
    Field press = random_smooth_field(ops.grid, rng, 2.0, 0.3);
    if (variant == SchemeVariant::LinearlyStable) {
      Field mu = rho * u, mv = rho * v;
      Field en = press / (p.gamma_gas - 1.0) + 0.5 * rho * (u * u + v * v);
      Field rr, rmu, rmv, re;
      euler::rhs_cons_2d(ops, p, rho, mu, mv, en, rr, rmu, rmv, re);
      for (const Field* f : {&rr, &rmu, &rmv, &re})
        acc.conservation(inner_product(ops, one, *f), absdot2(ops, one, *f));
      const double gx = lf_gamma_euler(rho, u, press, p.gamma_gas);
      const double gy = lf_gamma_euler(rho, v, press, p.gamma_gas);
      double form = 0.0, scale = 0.0;
      for (const Field* f : {&rho, &mu, &mv, &en}) {
        form += dissipation_form(ops, Axis::X, gx, *f) + dissipation_form(ops, Axis::Y, gy, *f);
        scale += absdot2(ops, *f, *f);
      }
      acc.dissipation(form, scale);
      continue;
    }
    Field r = rho.sqrt();
    Field m = r * u, w = r * v;
    Field q = press.sqrt();
    Field rr, rm, rw, rq;
    euler::rhs_skew_2d(ops, p, variant, r, m, w, q, rr, rm, rw, rq);
    acc.conservation(2.0 * inner_product(ops, r, rr), 2.0 * absdot2(ops, r, rr));
    acc.conservation(inner_product(ops, m, rr) + inner_product(ops, r, rm),
                     absdot2(ops, m, rr) + absdot2(ops, r, rm));
    acc.conservation(inner_product(ops, w, rr) + inner_product(ops, r, rw),
                     absdot2(ops, w, rr) + absdot2(ops, r, rw));
    std::array<double, 3> gx{0, 0, 0}, gy{0, 0, 0};
    if (variant == SchemeVariant::EntropyStable) {
      gx = euler::gamma_skew(p, rho, u, press);
      gy = euler::gamma_skew(p, rho, v, press);
    }
    const double cq = 2.0 / (p.gamma_gas - 1.0);
    const double form = dissipation_form(ops, Axis::X, gx[1], u) +
                        dissipation_form(ops, Axis::X, gx[1], v) +
                        dissipation_form(ops, Axis::X, cq * gx[2], q) +
                        dissipation_form(ops, Axis::Y, gy[1], u) +
                        dissipation_form(ops, Axis::Y, gy[1], v) +
                        dissipation_form(ops, Axis::Y, cq * gy[2], q);
    Field ghat_q = cq * q;
    const double lhs = 2.0 * inner_product(ops, r, rr) + inner_product(ops, m, rm) +
                       inner_product(ops, w, rw) + inner_product(ops, ghat_q, rq);
    const double scale = 2.0 * absdot2(ops, r, rr) + absdot2(ops, m, rm) +
                         absdot2(ops, w, rw) + absdot2(ops, ghat_q, rq) + std::abs(form);
    acc.entropy(lhs - form, scale);
    acc.dissipation(form, scale);
  }
}

}  // namespace

ProbeReport probe_semidiscrete(ModelId model, SchemeVariant variant,
                               const std::string& operator_id, int n, int trials,
                               std::uint64_t seed) {
  if ((model == ModelId::SweVecInv1D || model == ModelId::SweVecInv2D) &&
      variant != SchemeVariant::EntropyConserving)
    throw std::invalid_argument(
        "the vector-invariant form supports only the entropy_conserving variant");
  Accum acc;
  acc.rep.model = model_name(model);
  acc.rep.variant = variant_name(variant);
  acc.rep.trials = trials;
  acc.rep.n = n;
  std::mt19937_64 rng(seed);

  const bool is2d = model == ModelId::Swe2D || model == ModelId::SweVecInv2D ||
                    model == ModelId::Euler2D;
  if (!is2d) {
    Grid1D grid(n, 1.0, 0.0);
    DpOperatorPair pair = build_operator(operator_id, grid, true);
    switch (model) {
      case ModelId::Burgers: probe_burgers(acc, pair, variant, trials, rng); break;
      case ModelId::Swe1D: probe_swe1d(acc, pair, variant, trials, rng); break;
      case ModelId::SweVecInv1D: probe_vecinv1d(acc, pair, trials, rng); break;
      case ModelId::Euler1D: probe_euler1d(acc, pair, variant, trials, rng); break;
      default: throw std::logic_error("probe: model/dimension mismatch");
    }
  } else {
    Grid1D gx(n, 1.0, 0.0);
    Grid1D gy(n + 4, 1.2, 0.0);  // unequal axes exercise the tensor layout
    PairSet2D ops{Grid2D(gx, gy), build_operator(operator_id, gx, true),
                  build_operator(operator_id, gy, true)};
    switch (model) {
      case ModelId::Swe2D: probe_swe2d(acc, ops, variant, trials, rng); break;
      case ModelId::SweVecInv2D: probe_vecinv2d(acc, ops, trials, rng); break;
      case ModelId::Euler2D: probe_euler2d(acc, ops, variant, trials, rng); break;
      default: throw std::logic_error("probe: model/dimension mismatch");
    }
  }
  return acc.rep;
}

}  // namespace dpsbp

#include "dpsbp/models/euler.hpp"

#include <cmath>
#include <stdexcept>

namespace dpsbp::euler {

void primitive_to_skew(const Field& rho, const Field& u, const Field& p, Field& r, Field& m,
                       Field& q) {
  if (!((rho > 0.0).all() && (p > 0.0).all()))
    throw std::domain_error("euler: density and pressure must be positive");
  r = rho.sqrt();
  m = r * u;
  q = p.sqrt();
}

void skew_to_primitive(const Field& r, const Field& m, const Field& q, Field& rho, Field& u,
                       Field& p) {
  require_positive_skew(r, q);
  rho = r * r;
  u = m / r;
  p = q * q;
}

void require_positive_skew(const Field& r, const Field& q) {
  if (!r.isFinite().all() || !q.isFinite().all() || (r <= 0.0).any() || (q <= 0.0).any())
    throw std::domain_error("euler: sqrt(rho) and sqrt(p) must be positive");
}

std::array<double, 3> gamma_skew(const Params& p, const Field& rho, const Field& u_axis,
                                 const Field& press) {
  Field c = u_axis.abs() + (p.gamma_gas * press / rho).sqrt();
  return {0.25 * (rho.sqrt() * c).maxCoeff(), 0.5 * (rho * c).maxCoeff(), 0.5 * c.maxCoeff()};
}

void rhs_skew_1d(const DpOperatorPair& pair, const Params& p, SchemeVariant variant,
                 const Field& r, const Field& m, const Field& q, Field& out_r, Field& out_m,
                 Field& out_q) {
  require_positive_skew(r, q);
  const double g = p.gamma_gas;
  const Field u = m / r;
  const auto& D = pair.central;
  out_r = -0.5 * (u * D.apply(r) + D.apply(Field(u * r)));
  out_m = -0.5 * (u * D.apply(m) + D.apply(Field(u * m)) + 4.0 * (q / r) * D.apply(q));
  out_q = -0.5 * (g * D.apply(Field(u * q)) + (2.0 - g) * u * D.apply(q));
  if (variant == SchemeVariant::EntropyStable) {
    Field rho = r * r, press = q * q;
    auto ga = gamma_skew(p, rho, u, press);
    const auto& Dd = pair.upwind;
    out_r += ga[0] / r * Dd.apply(r);
    out_m += ga[0] / r * Dd.apply(m) + (ga[1] / r - ga[0]) * Dd.apply(u);
    out_q += ga[2] * Dd.apply(q);
  }
}

void rhs_skew_2d(const PairSet2D& ops, const Params& p, SchemeVariant variant, const Field& r,
                 const Field& m, const Field& w, const Field& q, Field& out_r, Field& out_m,
                 Field& out_w, Field& out_q) {
  require_positive_skew(r, q);
  const double g = p.gamma_gas;
  const Field u = m / r;
  const Field v = w / r;
  auto dxc = [&](const Field& f) { return apply_2d(ops, Axis::X, OpKind::Central, f); };
  auto dyc = [&](const Field& f) { return apply_2d(ops, Axis::Y, OpKind::Central, f); };

  out_r = -0.5 * (u * dxc(r) + v * dyc(r) + dxc(Field(u * r)) + dyc(Field(v * r)));
  out_m = -0.5 * (u * dxc(m) + v * dyc(m) + dxc(Field(u * m)) + dyc(Field(v * m)) +
                  4.0 * (q / r) * dxc(q));
  out_w = -0.5 * (u * dxc(w) + v * dyc(w) + dxc(Field(u * w)) + dyc(Field(v * w)) +
                  4.0 * (q / r) * dyc(q));
  out_q = -0.5 * (g * (dxc(Field(u * q)) + dyc(Field(v * q))) +
                  (2.0 - g) * (u * dxc(q) + v * dyc(q)));

  if (variant == SchemeVariant::EntropyStable) {
    Field rho = r * r, press = q * q;
    auto gx = gamma_skew(p, rho, u, press);
    auto gy = gamma_skew(p, rho, v, press);
    auto ddx = [&](const Field& f) { return apply_2d(ops, Axis::X, OpKind::Upwind, f); };
    auto ddy = [&](const Field& f) { return apply_2d(ops, Axis::Y, OpKind::Upwind, f); };
    out_r += gx[0] / r * ddx(r) + gy[0] / r * ddy(r);
    out_m += gx[0] / r * ddx(m) + (gx[1] / r - gx[0]) * ddx(u) + gy[0] / r * ddy(m) +
             (gy[1] / r - gy[0]) * ddy(u);
    out_w += gx[0] / r * ddx(w) + (gx[1] / r - gx[0]) * ddx(v) + gy[0] / r * ddy(w) +
             (gy[1] / r - gy[0]) * ddy(v);
    out_q += gx[2] * ddx(q) + gy[2] * ddy(q);
  }
}

namespace {
void require_positive_cons(const Field& rho, const Field& press) {
  if (!rho.isFinite().all() || !press.isFinite().all() || (rho <= 0.0).any() ||
      (press <= 0.0).any())
    throw std::domain_error("euler: density and pressure must be positive");
}
}  // namespace

void rhs_cons_1d(const DpOperatorPair& pair, const Params& p, const Field& rho,
                 const Field& mu, const Field& en, Field& out_rho, Field& out_mu,
                 Field& out_en) {
  const double g = p.gamma_gas;
  const Field u = mu / rho;
  const Field press = (g - 1.0) * (en - 0.5 * mu * u);
  require_positive_cons(rho, press);
  const double gamma = lf_gamma_euler(rho, u, press, g);
  const auto& D = pair.central;
  out_rho = -D.apply(mu) + upwind_dissipation(pair, gamma, rho);
  out_mu = -D.apply(Field(mu * u + press)) + upwind_dissipation(pair, gamma, mu);
  out_en = -D.apply(Field((en + press) * u)) + upwind_dissipation(pair, gamma, en);
}

void rhs_cons_2d(const PairSet2D& ops, const Params& p, const Field& rho, const Field& mu,
                 const Field& mv, const Field& en, Field& out_rho, Field& out_mu,
                 Field& out_mv, Field& out_en) {
  const double g = p.gamma_gas;
  const Field u = mu / rho;
  const Field v = mv / rho;
  const Field press = (g - 1.0) * (en - 0.5 * (mu * u + mv * v));
  require_positive_cons(rho, press);
  const double gx = lf_gamma_euler(rho, u, press, g);
  const double gy = lf_gamma_euler(rho, v, press, g);
  auto dxc = [&](const Field& f) { return apply_2d(ops, Axis::X, OpKind::Central, f); };
  auto dyc = [&](const Field& f) { return apply_2d(ops, Axis::Y, OpKind::Central, f); };
  auto diss = [&](const Field& f) -> Field {
    return upwind_dissipation(ops, Axis::X, gx, f) + upwind_dissipation(ops, Axis::Y, gy, f);
  };
  out_rho = -(dxc(mu) + dyc(mv)) + diss(rho);
  out_mu = -(dxc(Field(mu * u + press)) + dyc(Field(mu * v))) + diss(mu);
  out_mv = -(dxc(Field(mv * u)) + dyc(Field(mv * v + press))) + diss(mv);
  out_en = -(dxc(Field((en + press) * u)) + dyc(Field((en + press) * v))) + diss(en);
}

double energy_total_1d(const DpOperatorPair& pair, const Params& p, const Field& r,
                       const Field& m, const Field& q) {
  Field e = r * r + 0.5 * m * m + q * q / (p.gamma_gas - 1.0);
  return integral(pair.norm, e);
}

double energy_total_2d(const PairSet2D& ops, const Params& p, const Field& r, const Field& m,
                       const Field& w, const Field& q) {
  Field e = r * r + 0.5 * m * m + 0.5 * w * w + q * q / (p.gamma_gas - 1.0);
  return integral(ops, e);
}

double thermo_entropy_total(const Params& p, const Field& rho, const Field& press,
                            const DiagonalNorm& nx, const DiagonalNorm* ny) {
  if ((rho <= 0.0).any() || (press <= 0.0).any())
    throw std::domain_error("euler: thermodynamic entropy needs positive rho and p");
  Field s = rho * (press.log() - p.gamma_gas * rho.log()) / (p.gamma_gas - 1.0);
  if (!ny) return integral(nx, s);
  double acc = 0.0;
  long k = 0;
  for (long ix = 0; ix < nx.weights.size(); ++ix)
    for (long iy = 0; iy < ny->weights.size(); ++iy, ++k)
      acc += nx.weights[ix] * ny->weights[iy] * s[k];
  return acc;
}

void vortex_state(double x, double y, double t, const Params& p, double* rho, double* u,
                  double* v, double* press) {
  const double eps = 10.0;
  const double rho_b = 1.0, T_b = 10.0;
  // translate by the background velocity (1,1) with periodic wrapping
  auto wrap = [](double a) {
    double z = std::fmod(a + 8.0, 16.0);
    if (z < 0.0) z += 16.0;
    return z - 8.0;
  };
  const double xs = wrap(x - t), ys = wrap(y - t);
  const double r2 = xs * xs + ys * ys;
  const double g = p.gamma_gas;
  const double T = T_b - (g - 1.0) * eps * eps / (8.0 * g * M_PI * M_PI) * std::exp(1.0 - r2);
  const double swirl = eps / (2.0 * M_PI) * std::exp(0.5 * (1.0 - r2));
  *rho = rho_b * std::pow(T / T_b, 1.0 / (g - 1.0));
  *u = 1.0 - swirl * ys;
  *v = 1.0 + swirl * xs;
  *press = (*rho) * T;
}

void khi_state(double x, double y, double* rho, double* u, double* v, double* press) {
  const double B = std::tanh(15.0 * y + 7.5) - std::tanh(15.0 * y - 7.5);
  *rho = 0.5 + 0.75 * B;
  *u = 0.5 * (B - 1.0);
  *v = 0.1 * std::sin(2.0 * M_PI * x);
  *press = 1.0;
}

void mms1d_primitive(double x, double t, double* rho, double* u, double* p) {
  const double w = 2.0 * M_PI;
  *rho = 2.0 + 0.3 * std::sin(w * (x - t));
  *u = 1.0;
  *p = 2.0 + 0.3 * std::sin(w * (x + t));
}

void mms1d_forcing_skew(double x, double t, double* s_r, double* s_m, double* s_q) {
  double rho, u, p;
  mms1d_primitive(x, t, &rho, &u, &p);
  const double px = 0.6 * M_PI * std::cos(2.0 * M_PI * (x + t));
  *s_r = 0.0;
  *s_m = px / std::sqrt(rho);
  *s_q = px / std::sqrt(p);
}

void mms1d_forcing_cons(double x, double t, double gamma_gas, double* s_rho, double* s_mu,
                        double* s_en) {
  const double px = 0.6 * M_PI * std::cos(2.0 * M_PI * (x + t));
  *s_rho = 0.0;
  *s_mu = px;
  *s_en = px * (1.0 + 2.0 / (gamma_gas - 1.0));
}

}  // namespace dpsbp::euler

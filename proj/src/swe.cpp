#include "dpsbp/models/swe.hpp"

#include <cmath>
#include <stdexcept>

namespace dpsbp::swe {

void require_positive_depth(const Field& h) {
  if (!h.isFinite().all() || (h <= 0.0).any())
    throw std::domain_error("swe: water depth must be positive");
}

std::array<double, 2> gamma_flux_1d(const Params& p, const Field& h, const Field& u) {
  Field root = (p.g * h).sqrt();
  Field c = u.abs() + root;
  return {2.0 * (h / c).maxCoeff(), 4.0 * (h * (c - 0.5 * root)).maxCoeff()};
}

std::array<double, 3> gamma_flux_2d(const Params& p, const Field& h, const Field& u,
                                    const Field& v, Axis axis) {
  Field root = (p.g * h).sqrt();
  Field c = (u * u + v * v).sqrt() + root;
  const double g1 = 2.0 * (h / c).maxCoeff();
  const double g2 = 4.0 * (h * (c - 0.5 * root)).maxCoeff();
  const double g3 = 4.0 * (h * (u * v).abs().sqrt()).maxCoeff();
  if (axis == Axis::X) return {g1, g2, g3};
  return {g1, g3, g2};
}

void rhs_flux_1d(const DpOperatorPair& pair, const Params& p, SchemeVariant variant,
                 const Field& h, const Field& hu, Field& out_h, Field& out_hu) {
  require_positive_depth(h);
  const Field b = p.topography(h.size());
  const Field u = hu / h;
  const Field surface = h + b;
  const auto& D = pair.central;

  if (variant == SchemeVariant::LinearlyStable) {
    const double gamma = lf_gamma_swe(h, u, p.g);
    out_h = -D.apply(hu) + upwind_dissipation(pair, gamma, surface);
    out_hu = -D.apply(Field(h * u * u)) - p.g * h * D.apply(surface) +
             upwind_dissipation(pair, gamma, hu);
    return;
  }

  std::array<double, 2> gamma{0.0, 0.0};
  if (variant == SchemeVariant::EntropyStable) gamma = gamma_flux_1d(p, h, u);
  const Field gvar1 = p.g * surface - 0.5 * u * u;
  out_h = -D.apply(hu) + upwind_dissipation(pair, gamma[0], gvar1);
  out_hu = -(0.5 * D.apply(Field(h * u * u)) + 0.5 * u * D.apply(hu) +
             0.5 * hu * D.apply(u) + p.g * h * D.apply(surface)) +
           upwind_dissipation(pair, gamma[1], u);
}

void rhs_flux_2d(const PairSet2D& ops, const Params& p, SchemeVariant variant,
                 const Field& h, const Field& hu, const Field& hv, Field& out_h,
                 Field& out_hu, Field& out_hv) {
  require_positive_depth(h);
  const Field b = p.topography(h.size());
  const Field u = hu / h;
  const Field v = hv / h;
  const Field surface = h + b;
  auto dx = [&](const Field& f) { return apply_2d(ops, Axis::X, OpKind::Central, f); };
  auto dy = [&](const Field& f) { return apply_2d(ops, Axis::Y, OpKind::Central, f); };

  if (variant == SchemeVariant::LinearlyStable) {
    const double gx = lf_gamma_swe(h, u, p.g);
    const double gy = lf_gamma_swe(h, v, p.g);
    out_h = -(dx(hu) + dy(hv)) + upwind_dissipation(ops, Axis::X, gx, surface) +
            upwind_dissipation(ops, Axis::Y, gy, surface);
    out_hu = -(dx(Field(h * u * u)) + dy(Field(h * u * v))) - p.g * h * dx(surface) +
             upwind_dissipation(ops, Axis::X, gx, hu) +
             upwind_dissipation(ops, Axis::Y, gy, hu) + p.f * hv;
    out_hv = -(dx(Field(h * u * v)) + dy(Field(h * v * v))) - p.g * h * dy(surface) +
             upwind_dissipation(ops, Axis::X, gx, hv) +
             upwind_dissipation(ops, Axis::Y, gy, hv) - p.f * hu;
    return;
  }

  std::array<double, 3> gx{0, 0, 0}, gy{0, 0, 0};
  if (variant == SchemeVariant::EntropyStable) {
    gx = gamma_flux_2d(p, h, u, v, Axis::X);
    gy = gamma_flux_2d(p, h, u, v, Axis::Y);
  }
  const Field huv = h * u * v;
  const Field gvar1 = p.g * surface - 0.5 * (u * u + v * v);

  out_h = -(dx(hu) + dy(hv)) + upwind_dissipation(ops, Axis::X, gx[0], gvar1) +
          upwind_dissipation(ops, Axis::Y, gy[0], gvar1);
  out_hu = -(0.5 * (dx(Field(h * u * u)) + u * dx(hu) + hu * dx(u)) + p.g * h * dx(surface) +
             0.5 * (dy(huv) + u * dy(hv) + hv * dy(u))) +
           upwind_dissipation(ops, Axis::X, gx[1], u) +
           upwind_dissipation(ops, Axis::Y, gy[1], u) + p.f * hv;
  out_hv = -(0.5 * (dy(Field(h * v * v)) + v * dy(hv) + hv * dy(v)) + p.g * h * dy(surface) +
             0.5 * (dx(huv) + v * dx(hu) + hu * dx(v))) +
           upwind_dissipation(ops, Axis::X, gx[2], v) +
           upwind_dissipation(ops, Axis::Y, gy[2], v) - p.f * hu;
}

void rhs_vecinv_1d(const DpOperatorPair& pair, const Params& p, const Field& h,
                   const Field& u, Field& out_h, Field& out_u) {
  require_positive_depth(h);
  const Field b = p.topography(h.size());
  const auto& D = pair.central;
  Field G = 0.5 * u * u + p.g * (h + b);
  out_h = -D.apply(Field(h * u));
  out_u = -D.apply(G);
}

void rhs_vecinv_2d(const PairSet2D& ops, const Params& p, const Field& h, const Field& u,
                   const Field& v, Field& out_h, Field& out_u, Field& out_v) {
  require_positive_depth(h);
  const Field b = p.topography(h.size());
  auto dx = [&](const Field& f) { return apply_2d(ops, Axis::X, OpKind::Central, f); };
  auto dy = [&](const Field& f) { return apply_2d(ops, Axis::Y, OpKind::Central, f); };
  Field omega = dx(v) - dy(u) + p.f;
  Field G = 0.5 * (u * u + v * v) + p.g * (h + b);
  out_h = -(dx(Field(h * u)) + dy(Field(h * v)));
  out_u = omega * v - dx(G);
  out_v = -omega * u - dy(G);
}

Diagnostics diagnostics_1d(const DpOperatorPair& pair, const Params& p, const Field& h,
                           const Field& u) {
  Diagnostics d;
  const Field b = p.topography(h.size());
  Field e = 0.5 * (p.g * h * h + h * u * u) + p.g * h * b;
  d.energy = integral(pair.norm, e);
  d.mass = integral(pair.norm, h);
  d.momentum_x = integral(pair.norm, Field(h * u));
  return d;
}

Diagnostics diagnostics_2d(const PairSet2D& ops, const Params& p, const Field& h,
                           const Field& u, const Field& v) {
  Diagnostics d;
  const Field b = p.topography(h.size());
  Field e = 0.5 * (p.g * h * h + h * u * u + h * v * v) + p.g * h * b;
  d.energy = integral(ops, e);
  d.mass = integral(ops, h);
  d.momentum_x = integral(ops, Field(h * u));
  d.momentum_y = integral(ops, Field(h * v));
  Field omega = apply_2d(ops, Axis::X, OpKind::Central, v) -
                apply_2d(ops, Axis::Y, OpKind::Central, u) + p.f;
  d.vorticity = integral(ops, omega);
  d.enstrophy = integral(ops, Field(omega * omega / h));
  return d;
}

Field entropy_var_mass_1d(const Params& p, const Field& h, const Field& u) {
  return p.g * (h + p.topography(h.size())) - 0.5 * u * u;
}

Field entropy_var_mass_2d(const Params& p, const Field& h, const Field& u, const Field& v) {
  return p.g * (h + p.topography(h.size())) - 0.5 * (u * u + v * v);
}

void mms1d(double x, double t, double g, double* h, double* u, double* s_h, double* s_hu) {
  const double w = 2.0 * M_PI;
  const double hh = 2.0 + 0.3 * std::sin(w * (x - t));
  const double uu = 2.0 + 0.3 * std::sin(w * (x + t));
  *h = hh;
  *u = uu;
  if (!s_h) return;
  const double ht = -0.3 * w * std::cos(w * (x - t));
  const double hx = 0.3 * w * std::cos(w * (x - t));
  const double ut = 0.3 * w * std::cos(w * (x + t));
  const double ux = 0.3 * w * std::cos(w * (x + t));
  *s_h = ht + hx * uu + hh * ux;
  *s_hu = ht * uu + hh * ut + hx * uu * uu + 2.0 * hh * uu * ux + g * hh * hx;
}

void mms2d(double x, double y, double t, double g, double* h, double* u, double* v,
           double* s_h, double* s_hu, double* s_hv) {
  const double w = 2.0 * M_PI;
  const double sxm = std::sin(w * (x - t)), cxm = std::cos(w * (x - t));
  const double sym = std::sin(w * (y - t)), cym = std::cos(w * (y - t));
  const double sxp = std::sin(w * (x + t)), cxp = std::cos(w * (x + t));
  const double syp = std::sin(w * (y + t)), cyp = std::cos(w * (y + t));
  const double hh = 2.0 + 0.2 * sxm * sym;
  const double uu = 2.0 + 0.2 * sxp * syp;
  *h = hh;
  *u = uu;
  *v = uu;
  if (!s_h) return;
  const double ht = -0.2 * w * (cxm * sym + sxm * cym);
  const double hx = 0.2 * w * cxm * sym;
  const double hy = 0.2 * w * sxm * cym;
  const double ut = 0.2 * w * (cxp * syp + sxp * cyp);
  const double ux = 0.2 * w * cxp * syp;
  const double uy = 0.2 * w * sxp * cyp;
  const double vv = uu, vt = ut, vx = ux, vy = uy;
  *s_h = ht + hx * uu + hh * ux + hy * vv + hh * vy;
  *s_hu = ht * uu + hh * ut + hx * uu * uu + 2.0 * hh * uu * ux + g * hh * hx + hy * uu * vv +
          hh * uy * vv + hh * uu * vy;
  *s_hv = ht * vv + hh * vt + hy * vv * vv + 2.0 * hh * vv * vy + g * hh * hy + hx * uu * vv +
          hh * ux * vv + hh * uu * vx;
}

void mms2d_fields(const Grid2D& grid, double t, double g, Field* h, Field* u, Field* v,
                  Field* s_h, Field* s_hu, Field* s_hv) {
  const double w = 2.0 * M_PI;
  const int nx = grid.nx(), ny = grid.ny();
  Field sxm(nx), cxm(nx), sxp(nx), cxp(nx);
  for (int i = 0; i < nx; ++i) {
    sxm[i] = std::sin(w * (grid.x(i) - t));
    cxm[i] = std::cos(w * (grid.x(i) - t));
    sxp[i] = std::sin(w * (grid.x(i) + t));
    cxp[i] = std::cos(w * (grid.x(i) + t));
  }
  Field sym(ny), cym(ny), syp(ny), cyp(ny);
  for (int j = 0; j < ny; ++j) {
    sym[j] = std::sin(w * (grid.y(j) - t));
    cym[j] = std::cos(w * (grid.y(j) - t));
    syp[j] = std::sin(w * (grid.y(j) + t));
    cyp[j] = std::cos(w * (grid.y(j) + t));
  }
  const bool forced = s_h != nullptr;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const long k = grid.flat(i, j);
      const double hh = 2.0 + 0.2 * sxm[i] * sym[j];
      const double uu = 2.0 + 0.2 * sxp[i] * syp[j];
      (*h)[k] = hh;
      (*u)[k] = uu;
      (*v)[k] = uu;
      if (!forced) continue;
      const double ht = -0.2 * w * (cxm[i] * sym[j] + sxm[i] * cym[j]);
      const double hx = 0.2 * w * cxm[i] * sym[j];
      const double hy = 0.2 * w * sxm[i] * cym[j];
      const double ut = 0.2 * w * (cxp[i] * syp[j] + sxp[i] * cyp[j]);
      const double ux = 0.2 * w * cxp[i] * syp[j];
      const double uy = 0.2 * w * sxp[i] * cyp[j];
      const double vv = uu, vt = ut, vx = ux, vy = uy;
      (*s_h)[k] = ht + hx * uu + hh * ux + hy * vv + hh * vy;
      (*s_hu)[k] = ht * uu + hh * ut + hx * uu * uu + 2.0 * hh * uu * ux + g * hh * hx +
                   hy * uu * vv + hh * uy * vv + hh * uu * vy;
      (*s_hv)[k] = ht * vv + hh * vt + hy * vv * vv + 2.0 * hh * vv * vy + g * hh * hy +
                   hx * uu * vv + hh * ux * vv + hh * uu * vx;
    }
  }
}

double lake_topography(double x) {
  if (x > 8.0 && x < 12.0) return 0.2 - 0.05 * (x - 10.0) * (x - 10.0);
  return 0.0;
}

void merging_vortices_init(double x, double y, double f, double g, double H, double* h,
                           double* u, double* v) {
  const double cm = (3.05 - 0.45) * M_PI / 3.0;
  const double cp = (3.05 + 0.45) * M_PI / 3.0;
  const double pm = std::exp(-2.5 * ((x - cm) * (x - cm) + (y - M_PI) * (y - M_PI)));
  const double pp = std::exp(-2.5 * ((x - cp) * (x - cp) + (y - M_PI) * (y - M_PI)));
  const double psi = pm + pp;
  const double psi_x = -5.0 * (x - cm) * pm - 5.0 * (x - cp) * pp;
  const double psi_y = -5.0 * (y - M_PI) * psi;
  *h = H + f / g * psi;
  *u = -psi_y;
  *v = psi_x;
}

void barotropic_shear_init(double x, double y, const BarotropicParams& bp, double* h,
                           double* u, double* v) {
  const double yp = 0.25 * bp.L;
  const double ym = 0.75 * bp.L;
  const double a = 1e-6;
  auto gd = [](double z) { return std::atan(std::sinh(z)); };  // int sech
  *u = bp.u0 * (1.0 / std::cosh(a * (y - yp)) - 1.0 / std::cosh(a * (y - ym)));
  *v = 0.0;
  // -(f/g) * int_0^y u(s) ds in closed form
  const double I = bp.u0 / a *
                   ((gd(a * (y - yp)) - gd(a * (0.0 - yp))) -
                    (gd(a * (y - ym)) - gd(a * (0.0 - ym))));
  const double x1 = 0.85 * bp.L, y1 = ym;
  const double x2 = 0.15 * bp.L, y2 = yp;
  auto d2 = [&](double cx, double cy) {
    return (x - cx) * (x - cx) / (bp.L * bp.L) + (y - cy) * (y - cy) / (bp.L * bp.L);
  };
  const double bump = 0.01 * bp.H * (std::exp(-bp.k * d2(x1, y1)) + std::exp(-bp.k * d2(x2, y2)));
  *h = bp.H - bp.f / bp.g * I + bump;
}

}  // namespace dpsbp::swe

#include "dpsbp/time_loop.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace dpsbp {

namespace {

State axpy(const State& a, double c, const State& b) {
  State out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + c * b[i];
  return out;
}

State combine(double ca, const State& a, double cb, const State& b, double cf,
              const State& f) {
  State out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i] + cf * f[i];
  return out;
}

}  // namespace

std::optional<double> rk_step(const Problem& problem, double t, double dt, State& u) {
  using T = SspRk54Tableau;
  State f(u.size());
  try {
    problem.rhs(t, u, f);
    State u1 = axpy(u, T::b10 * dt, f);
    if (!problem.admissible(u1)) return t + T::c1 * dt;

    problem.rhs(t + T::c1 * dt, u1, f);
    State u2 = combine(T::a20, u, T::a21, u1, T::b21 * dt, f);
    if (!problem.admissible(u2)) return t + T::c2 * dt;

    problem.rhs(t + T::c2 * dt, u2, f);
    State u3 = combine(T::a30, u, T::a32, u2, T::b32 * dt, f);
    if (!problem.admissible(u3)) return t + T::c3 * dt;

    State f3(u.size());
    problem.rhs(t + T::c3 * dt, u3, f3);
    State u4 = combine(T::a40, u, T::a43, u3, T::b43 * dt, f3);
    if (!problem.admissible(u4)) return t + T::c4 * dt;

    problem.rhs(t + T::c4 * dt, u4, f);
    for (size_t i = 0; i < u.size(); ++i)
      u[i] = T::f2 * u2[i] + T::f3 * u3[i] + T::fb3 * dt * f3[i] + T::f4 * u4[i] +
             T::fb4 * dt * f[i];
    if (!problem.admissible(u)) return t + dt;
  } catch (const std::domain_error&) {
    return t;  // positivity fault surfaced inside a stage evaluation
  }
  return std::nullopt;
}

RunRecord run(const Problem& problem, State& u, const TimeLoopOptions& opt,
              const SnapshotSink& snapshot) {
  if (!(opt.dt > 0.0)) throw std::invalid_argument("run: dt must be positive");
  if (!(opt.t_final >= 0.0)) throw std::invalid_argument("run: t_final must be non-negative");
  const auto wall0 = std::chrono::steady_clock::now();

  RunRecord rec;
  rec.series.start(problem.channels, problem.invariants(u), problem.invariant_scales(u));

  std::vector<double> snaps = opt.snapshot_times;
  std::sort(snaps.begin(), snaps.end());
  size_t next_snap = 0;
  auto emit_snapshots = [&](double t) {
    while (next_snap < snaps.size() && snaps[next_snap] <= t + 1e-12) {
      if (snapshot) snapshot(t, u);
      ++next_snap;
    }
  };
  emit_snapshots(0.0);

  const long n_steps = static_cast<long>(std::ceil(opt.t_final / opt.dt - 1e-12));
  double t = 0.0;
  for (long k = 0; k < n_steps; ++k) {
    const bool last = k == n_steps - 1;
    const double dt = last ? opt.t_final - t : opt.dt;
    auto crash = rk_step(problem, t, dt, u);
    if (crash) {
      rec.crashed = true;
      rec.crash_time = *crash;
      rec.final_time = t;
      rec.steps = k;
      rec.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
      return rec;
    }
    t = last ? opt.t_final : (k + 1) * opt.dt;
    rec.steps = k + 1;
    if ((k + 1) % opt.diag_stride == 0 || last)
      rec.series.record(t, problem.invariants(u));
    emit_snapshots(t);
  }
  rec.final_time = opt.t_final;
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  return rec;
}

}  // namespace dpsbp

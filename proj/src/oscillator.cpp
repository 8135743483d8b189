#include "breather/oscillator.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "breather/errors.hpp"

namespace breather::oscillator {

namespace {

namespace ode = boost::numeric::odeint;
using State = std::array<double, 2>;

constexpr double kDtMax = 0.5;
constexpr double kSeamClamp = 0.35;
constexpr double kSeamFloor = 1e-6;
constexpr int kMaxRejects = 200;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// sign(x) * |x|^k; keeps |phi|^(p-1) phi real for non-integer p.
double signed_pow(double x, double k) {
  if (x == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(x), k), x);
}

double level_of(const State& x, double p, double q) {
  const double a = std::abs(x[0]);
  return x[1] * x[1] + x[0] * x[0] + (2.0 / (p + 1.0)) * std::pow(a, p + 1.0) +
         (2.0 / (q + 1.0)) * std::pow(a, q + 1.0);
}

// RKF78 with arc splitting: integration stops exactly at each phi = 0
// crossing and restarts from (0, +-sqrt(level)), which is the exact
// intersection of the level set with the phi = 0 axis. Within an arc the
// vector field is smooth even for non-integer exponents; the |phi|^(p+2)
// local term near a crossing is invisible to the embedded error estimate,
// so steps adjacent to a seam are clamped geometrically.
struct Engine {
  double p, q;
  double level;  // first-integral level of the orbit being followed
  SolverSettings st;

  using Stepper = ode::controlled_runge_kutta<ode::runge_kutta_fehlberg78<State>>;

  Stepper make_stepper() const {
    return ode::make_controlled(st.abs_tol, st.rel_tol, ode::runge_kutta_fehlberg78<State>());
  }

  void rhs(const State& x, State& dxdt, double /*t*/) const {
    dxdt[0] = x[1];
    dxdt[1] = -(x[0] + signed_pow(x[0], p) + signed_pow(x[0], q));
  }

  void clamp_toward_zero(const State& x, double dir, double& dt) const {
    if (x[0] != 0.0 && x[1] != 0.0 && (x[0] > 0) != (dir * x[1] > 0)) {
      const double cap = kSeamClamp * std::abs(x[0] / x[1]) + kSeamFloor;
      if (std::abs(dt) > cap) dt = dir * cap;
    }
  }

  void check_rejects(int rejects) const {
    if (rejects > kMaxRejects)
      throw StepSizeUnderflow("adaptive step control failed to make progress");
  }

  // Plain advance without crossing restarts; used by the polishers where the
  // interval is at most one step long.
  void advance(State& x, double& tau, double t_end) const {
    if (t_end == tau) return;
    auto stepper = make_stepper();
    const double dir = (t_end > tau) ? 1.0 : -1.0;
    double dt = dir * std::min(1e-2, std::abs(t_end - tau));
    int rejects = 0;
    while ((t_end - tau) * dir > 0) {
      if (std::abs(dt) > kDtMax) dt = dir * kDtMax;
      clamp_toward_zero(x, dir, dt);
      if ((tau + dt - t_end) * dir > 0) dt = t_end - tau;
      if (stepper.try_step([this](const State& s, State& d, double t) { rhs(s, d, t); }, x, tau,
                           dt) == ode::fail) {
        check_rejects(++rejects);
      } else {
        rejects = 0;
      }
    }
  }

  // Locate the zero of state component `comp` inside an accepted step
  // [tau0, tau0+span] starting from x0. Newton on re-integrated evaluations,
  // bisection safeguarded. Returns the polished offset and state.
  std::pair<double, State> polish(const State& x0, double tau0, double span, const State& x1,
                                  int comp) const {
    double lo = 0.0, hi = span;
    double delta = span * x0[comp] / (x0[comp] - x1[comp]);
    if (!(delta > lo && delta < hi)) delta = 0.5 * span;
    State s = x1;
    const bool hi_sign = x1[comp] > 0;
    for (int it = 0; it < 80; ++it) {
      s = x0;
      double tt = tau0;
      advance(s, tt, tau0 + delta);
      if (s[comp] == 0.0) return {delta, s};
      if ((s[comp] > 0) == hi_sign) hi = delta;
      else lo = delta;
      State d;
      rhs(s, d, 0.0);
      const double slope = (comp == 0) ? s[1] : d[1];
      double next = (slope != 0.0) ? delta - s[comp] / slope : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - delta) <= 5e-17 * (std::abs(tau0) + std::abs(next)) + 5e-307) {
        delta = next;
        s = x0;
        double t2 = tau0;
        advance(s, t2, tau0 + delta);
        return {delta, s};
      }
      delta = next;
    }
    return {delta, s};
  }

  // Advance to t_end, splitting at phi = 0 crossings. on_crossing(tau, x) is
  // called at each polished crossing (after the level projection); returning
  // true stops the walk. Returns true when stopped by the callback.
  template <class OnCross>
  bool advance_split(State& x, double& tau, double t_end, OnCross&& on_crossing) const {
    auto stepper = make_stepper();
    const double dir = (t_end >= tau) ? 1.0 : -1.0;
    double seam_tau = (x[0] == 0.0) ? tau : kNan;
    double dt = dir * (std::isnan(seam_tau) ? 1e-2 : kSeamFloor);
    int rejects = 0;
    const double vlevel = std::sqrt(level);
    while ((t_end - tau) * dir > 0) {
      if (std::abs(dt) > kDtMax) dt = dir * kDtMax;
      clamp_toward_zero(x, dir, dt);
      if (!std::isnan(seam_tau)) {
        const double cap = kSeamClamp * std::abs(tau - seam_tau) + kSeamFloor;
        if (std::abs(dt) > cap) dt = dir * cap;
        else seam_tau = kNan;
      }
      if ((tau + dt - t_end) * dir > 0) dt = t_end - tau;
      const State x0 = x;
      const double tau0 = tau;
      if (stepper.try_step([this](const State& s, State& d, double t) { rhs(s, d, t); }, x, tau,
                           dt) == ode::fail) {
        check_rejects(++rejects);
        continue;
      }
      rejects = 0;
      const bool crossed = (x0[0] * x[0] < 0.0) || (x[0] == 0.0 && x0[0] != 0.0);
      if (crossed) {
        auto [delta, s] = polish(x0, tau0, tau - tau0, x, 0);
        x = {0.0, std::copysign(vlevel, s[1])};
        tau = tau0 + delta;
        seam_tau = tau;
        dt = dir * kSeamFloor;
        if (on_crossing(tau, x)) return true;
      }
    }
    return false;
  }
};

Engine make_engine(EnergyLevel e, const PowerPair& powers, const SolverSettings& st) {
  return Engine{powers.p, powers.q, e.value, st};
}

}  // namespace

EnergyLevel first_integral(const PhaseState& state, const PowerPair& powers) {
  const double a = std::abs(state.phi);
  const double b = state.phidot;
  double v = b * b + state.phi * state.phi +
             (2.0 / (powers.p + 1.0)) * std::pow(a, powers.p + 1.0) +
             (2.0 / (powers.q + 1.0)) * std::pow(a, powers.q + 1.0);
  return EnergyLevel(v);
}

PhaseState ode_rhs(const PhaseState& state, const PowerPair& powers) {
  return {state.phidot,
          -(state.phi + signed_pow(state.phi, powers.p) + signed_pow(state.phi, powers.q))};
}

PhaseState integrate_orbit(EnergyLevel e, double t, const PowerPair& powers,
                           const SolverSettings& settings) {
  if (!std::isfinite(t)) throw std::invalid_argument("integrate_orbit: t must be finite");
  if (e.value == 0.0) return {0.0, 0.0};
  Engine eng = make_engine(e, powers, settings);
  State x{0.0, std::sqrt(e.value)};
  double tau = 0.0;
  eng.advance_split(x, tau, t, [](double, const State&) { return false; });
  return {x[0], x[1]};
}

std::vector<PhaseState> orbit_trajectory(EnergyLevel e, std::span<const double> times,
                                         const PowerPair& powers, const SolverSettings& settings) {
  std::vector<PhaseState> out;
  out.reserve(times.size());
  if (e.value == 0.0) {
    out.assign(times.size(), PhaseState{0.0, 0.0});
    return out;
  }
  Engine eng = make_engine(e, powers, settings);
  State x{0.0, std::sqrt(e.value)};
  double tau = 0.0;
  for (double t : times) {
    eng.advance_split(x, tau, t, [](double, const State&) { return false; });
    out.push_back({x[0], x[1]});
  }
  return out;
}

double orbit_return_time(EnergyLevel e, const PowerPair& powers, const SolverSettings& settings) {
  if (!(e.value > 0.0)) throw std::invalid_argument("orbit_return_time: requires e > 0");
  Engine eng = make_engine(e, powers, settings);
  State x{0.0, std::sqrt(e.value)};
  double tau = 0.0;
  double found = kNan;
  eng.advance_split(x, tau, 100.0, [&](double tc, const State& xc) {
    if (xc[1] > 0.0) {
      found = tc;
      return true;
    }
    return false;
  });
  if (std::isnan(found)) throw NoReturnDetected("no orbit return within t <= 100");
  return found;
}

double orbit_peak_displacement(EnergyLevel e, const PowerPair& powers,
                               const SolverSettings& settings) {
  if (e.value == 0.0) return 0.0;
  Engine eng = make_engine(e, powers, settings);
  // From (0, sqrt(e)) the first turning point (phidot = 0) precedes the
  // first phi crossing, so no seam handling is needed before it.
  auto stepper = eng.make_stepper();
  State x{0.0, std::sqrt(e.value)};
  double tau = 0.0, seam_tau = 0.0;
  double dt = kSeamFloor;
  int rejects = 0;
  while (tau < 100.0) {
    if (dt > kDtMax) dt = kDtMax;
    if (!std::isnan(seam_tau)) {
      const double cap = kSeamClamp * (tau - seam_tau) + kSeamFloor;
      if (dt > cap) dt = cap;
      else seam_tau = kNan;
    }
    const State x0 = x;
    const double tau0 = tau;
    if (stepper.try_step([&eng](const State& s, State& d, double t) { eng.rhs(s, d, t); }, x, tau,
                         dt) == ode::fail) {
      eng.check_rejects(++rejects);
      continue;
    }
    rejects = 0;
    if (x0[1] * x[1] < 0.0 || (x[1] == 0.0 && x0[1] != 0.0)) {
      auto [delta, s] = eng.polish(x0, tau0, tau - tau0, x, 1);
      (void)delta;
      return std::abs(s[0]);
    }
  }
  throw NoReturnDetected("no turning point within t <= 100");
}

}  // namespace breather::oscillator

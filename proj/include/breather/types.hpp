#pragma once

#include <cmath>
#include <stdexcept>

namespace breather {

// Nonlinearity exponents, 1 < p < q.
struct PowerPair {
  double p;
  double q;

  PowerPair(double p_, double q_) : p(p_), q(q_) {
    if (!(1.0 < p_) || !(p_ < q_) || !std::isfinite(q_))
      throw std::invalid_argument("PowerPair requires 1 < p < q");
  }
};

// A point (phi, phidot) in the oscillator phase plane.
struct PhaseState {
  double phi = 0.0;
  double phidot = 0.0;
};

// Value of the first integral identifying a closed orbit.
struct EnergyLevel {
  double value = 0.0;

  EnergyLevel() = default;
  explicit EnergyLevel(double v) : value(v) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("EnergyLevel must be finite and >= 0");
  }
};

// Tolerances for the adaptive orbit integrator. Tighter than typical
// defaults: the first-integral drift contract (|B - e| <= e*1e-10 + 1e-12)
// is not met at 1e-12/1e-14 for non-integer exponents.
struct SolverSettings {
  double rel_tol = 1e-14;
  double abs_tol = 1e-16;
};

}  // namespace breather

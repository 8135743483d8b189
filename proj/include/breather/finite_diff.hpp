#pragma once

#include <cmath>
#include <stdexcept>

namespace breather::fd {

// Finite-difference derivative with one Richardson level over steps (h, 2h).
// Central stencils when the target stays in r >= 0, one-sided otherwise.
// Step scales are chosen against the double-precision roundoff floor for
// profile magnitudes up to ~1e6: first-order errors land near 1e-7 absolute,
// second-order near 1e-5 for worst-case degree-6 polynomials on [0, 10].
template <class F>
double derivative(F&& f, double r, int order, double step_scale = 0.0) {
  if (order != 1 && order != 2) throw std::invalid_argument("fd::derivative: order must be 1 or 2");
  if (step_scale <= 0.0) step_scale = (order == 1) ? 5e-4 : 1.5e-3;
  const double h = step_scale * std::max(1.0, r);
  const bool one_sided = (r - 2.0 * h) < 0.0;

  auto d1 = [&](double hh) {
    if (one_sided) return (-3.0 * f(r) + 4.0 * f(r + hh) - f(r + 2.0 * hh)) / (2.0 * hh);
    return (f(r + hh) - f(r - hh)) / (2.0 * hh);
  };
  auto d2 = [&](double hh) {
    if (one_sided)
      return (2.0 * f(r) - 5.0 * f(r + hh) + 4.0 * f(r + 2.0 * hh) - f(r + 3.0 * hh)) / (hh * hh);
    return (f(r + hh) - 2.0 * f(r) + f(r - hh)) / (hh * hh);
  };

  const double coarse = (order == 1) ? d1(2.0 * h) : d2(2.0 * h);
  const double fine = (order == 1) ? d1(h) : d2(h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace breather::fd

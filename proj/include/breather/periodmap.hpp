#pragma once

#include <utility>

#include "breather/types.hpp"

// Amplitude map A(e), period map P(e) of the reduced oscillator, the
// auxiliary maps W and Psi, the inverse Q = P^-1, and a power-law fit of
// Q near s = 2pi.
//
// The period is the quadrature
//
//   P(e) = 4 * Int_0^1 [ 1 - z^2 + 2/(p+1) A^(p-1) (1 - z^(p+1))
//                              + 2/(q+1) A^(q-1) (1 - z^(q+1)) ]^(-1/2) dz
//
// with A = A(e). The endpoint singularity is removed by z = sin(theta):
// factoring (1 - z^2) out of the bracket leaves the smooth integrand
// [1 + up*m_p(z) + uq*m_q(z)]^(-1/2), m_k(z) = (1 - z^(k+1))/(1 - z^2),
// on theta in [0, pi/2], which fixed Gauss panels integrate to spectral
// accuracy.
//
// The *_single_power variants drop the q-term (pure p-nonlinearity); they
// back the sanity route of the tail-exponent report.

namespace breather::periodmap {

struct QuadratureSettings {
  int panels = 64;
  int nodes_per_panel = 16;
};

// Local power-law fit Q(s) ~ lambda_hat * (2pi - s)^alpha on a window.
struct TailFit {
  double alpha = 0.0;
  double lambda_hat = 0.0;
  std::pair<double, double> window{0.0, 0.0};  // s-range used
  double residual = 0.0;                       // max relative fit deviation
};

// Unique A >= 0 with A^2 + 2/(p+1) A^(p+1) + 2/(q+1) A^(q+1) = e.
double amplitude(EnergyLevel e, const PowerPair& powers);

// Minimal period of the orbit at level e; P(0) = 2pi exactly.
double period(EnergyLevel e, const PowerPair& powers, const QuadratureSettings& settings = {});

// W(u) with u = 2/(q+1) A^(q-1); W(0) = 2pi, strictly decreasing to 0.
double W_of_u(double u, const PowerPair& powers, const QuadratureSettings& settings = {});

// Psi(u): the level e expressed through u; inverse of u(e).
EnergyLevel Psi_of_u(double u, const PowerPair& powers);

// Q(s): the unique e >= 0 with period(e) = s, for s in (0, 2pi].
// Throws OutOfRange outside that range.
EnergyLevel invert_period(double s, const PowerPair& powers,
                          const QuadratureSettings& settings = {});

// Log-log least squares of Q(s) against (2pi - s) on a geometric grid in
// the window (pair of s values, upper end within 1e-2 of 2pi). Throws
// FitUnstable if alpha moves by more than 1% under twofold grid refinement.
TailFit fit_tail_exponent(const PowerPair& powers, std::pair<double, double> window,
                          const QuadratureSettings& settings = {});

double amplitude_single_power(EnergyLevel e, const PowerPair& powers);
double period_single_power(EnergyLevel e, const PowerPair& powers,
                           const QuadratureSettings& settings = {});
EnergyLevel invert_period_single_power(double s, const PowerPair& powers,
                                       const QuadratureSettings& settings = {});
TailFit fit_tail_exponent_single_power(const PowerPair& powers, std::pair<double, double> window,
                                       const QuadratureSettings& settings = {});

}  // namespace breather::periodmap

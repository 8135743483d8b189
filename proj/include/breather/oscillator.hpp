#pragma once

#include <span>
#include <vector>

#include "breather/types.hpp"

// The reduced autonomous oscillator
//
//   phi'' + phi + |phi|^(p-1) phi + |phi|^(q-1) phi = 0,  1 < p < q,
//
// with first integral
//
//   B(a, b) = b^2 + a^2 + 2/(p+1) |a|^(p+1) + 2/(q+1) |a|^(q+1).
//
// Orbits are parameterized by the level e of B through the initial
// condition (0, sqrt(e)).

namespace breather::oscillator {

EnergyLevel first_integral(const PhaseState& state, const PowerPair& powers);

PhaseState ode_rhs(const PhaseState& state, const PowerPair& powers);

// State at time t on the orbit of level e, starting from (0, sqrt(e)).
// t may be negative. First-integral drift of the result is bounded by
// e*1e-10 + 1e-12 at default settings.
PhaseState integrate_orbit(EnergyLevel e, double t, const PowerPair& powers,
                           const SolverSettings& settings = {});

// States at a monotone non-decreasing sequence of times, one integration
// pass. Equivalent to calling integrate_orbit per time, but O(n) cheaper.
std::vector<PhaseState> orbit_trajectory(EnergyLevel e, std::span<const double> times,
                                         const PowerPair& powers,
                                         const SolverSettings& settings = {});

// First t > 0 with phi(t) = 0 and phidot(t) > 0: the minimal period of the
// orbit, located by sign-change detection plus local root polishing.
// Throws NoReturnDetected if no return is found by t = 100.
double orbit_return_time(EnergyLevel e, const PowerPair& powers,
                         const SolverSettings& settings = {});

// max_t |phi(t; e)| over one period, located at the first turning point
// (phidot sign change) and polished on phidot = 0.
double orbit_peak_displacement(EnergyLevel e, const PowerPair& powers,
                               const SolverSettings& settings = {});

}  // namespace breather::oscillator

#pragma once

#include <utility>

#include "kgewi/ewi.hpp"
#include "kgewi/problem.hpp"

namespace kgewi {

/// Method-of-lines right-hand side in Fourier space for the first-order
/// system (u, v = du/dt):
///   u' = v,   v'_l = -omega_l^2 u_l - f(u)_l / eps^2,
/// with f(u) evaluated pseudospectrally.
std::pair<SpectralField, SpectralField> rk4_rhs(const KGEProblem& problem, const GridSpec& grid,
                                                const SolverState& state);

/// Classical four-stage Runge-Kutta on the coupled system; same grid and
/// transforms as the EWI path. Throws InstabilityError on blow-up.
SolverState integrate_rk4(const KGEProblem& problem, const GridSpec& grid, double tau, double T,
                          const IntegrateOptions& opts = {});

}  // namespace kgewi

#include "kgewi/rk4.hpp"

#include <cmath>
#include <vector>

#include "kgewi/weights.hpp"

namespace kgewi {

namespace {

struct Rhs {
  SpectralField du;
  SpectralField dv;
};

Rhs eval_rhs(const KGEProblem& problem, const GridSpec& grid, const std::vector<double>& omega2,
             const SpectralField& u, const SpectralField& v) {
  const double eps2 = problem.epsilon * problem.epsilon;
  const RealField u_grid = inverse_dft(grid, u);
  const RealField f_grid = nonlinearity_field(problem, grid, u_grid, 0);
  const SpectralField f_hat = forward_dft(grid, f_grid);
  Rhs r;
  r.du = v;
  r.dv = SpectralField(grid.M);
  for (int k = 0; k < grid.M; ++k) {
    r.dv[k] = -omega2[static_cast<size_t>(k)] * u[k] - f_hat[k] / eps2;
  }
  return r;
}

double finite_probe(const SpectralField& c) {
  double acc = 0.0;
  for (const auto& z : c.coeffs) acc += std::abs(z.real()) + std::abs(z.imag());
  return acc;
}

std::vector<double> omega_squared(const GridSpec& grid, double epsilon) {
  std::vector<double> w2 = mode_frequencies(grid, epsilon).omega;
  for (auto& w : w2) w *= w;
  return w2;
}

}  // namespace

std::pair<SpectralField, SpectralField> rk4_rhs(const KGEProblem& problem, const GridSpec& grid,
                                                const SolverState& state) {
  const Rhs r = eval_rhs(problem, grid, omega_squared(grid, problem.epsilon), state.u, state.udot);
  return {r.du, r.dv};
}

SolverState integrate_rk4(const KGEProblem& problem, const GridSpec& grid, double tau, double T,
                          const IntegrateOptions& opts) {
  if (!(T > 0.0)) throw std::invalid_argument("integrate_rk4: requires T > 0");
  if (!(tau > 0.0)) throw std::invalid_argument("integrate_rk4: requires tau > 0");
  const double ratio = T / tau;
  const long steps = std::lround(ratio);
  if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-9)
    throw std::invalid_argument("integrate_rk4: T/tau is not an integer");

  const std::vector<double> omega2 = omega_squared(grid, problem.epsilon);
  const int M = grid.M;

  SolverState s = initial_state(problem, grid);
  if (opts.observer) opts.observer(s);

  SpectralField u2(M), v2(M);
  for (long n = 0; n < steps; ++n) {
    const Rhs k1 = eval_rhs(problem, grid, omega2, s.u, s.udot);
    for (int k = 0; k < M; ++k) {
      u2[k] = s.u[k] + 0.5 * tau * k1.du[k];
      v2[k] = s.udot[k] + 0.5 * tau * k1.dv[k];
    }
    const Rhs k2 = eval_rhs(problem, grid, omega2, u2, v2);
    for (int k = 0; k < M; ++k) {
      u2[k] = s.u[k] + 0.5 * tau * k2.du[k];
      v2[k] = s.udot[k] + 0.5 * tau * k2.dv[k];
    }
    const Rhs k3 = eval_rhs(problem, grid, omega2, u2, v2);
    for (int k = 0; k < M; ++k) {
      u2[k] = s.u[k] + tau * k3.du[k];
      v2[k] = s.udot[k] + tau * k3.dv[k];
    }
    const Rhs k4 = eval_rhs(problem, grid, omega2, u2, v2);
    for (int k = 0; k < M; ++k) {
      s.u[k] += tau / 6.0 * (k1.du[k] + 2.0 * k2.du[k] + 2.0 * k3.du[k] + k4.du[k]);
      s.udot[k] += tau / 6.0 * (k1.dv[k] + 2.0 * k2.dv[k] + 2.0 * k3.dv[k] + k4.dv[k]);
    }
    s.t = static_cast<double>(n + 1) * tau;
    if (!std::isfinite(finite_probe(s.u))) throw InstabilityError(n + 1, s.t);
    if (opts.observer) opts.observer(s);
  }
  return s;
}

}  // namespace kgewi

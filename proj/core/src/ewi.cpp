#include "kgewi/ewi.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>

namespace kgewi {

namespace {

std::string instability_message(long step, double t) {
  return "integration became non-finite at step " + std::to_string(step) +
         " (t = " + std::to_string(t) + ")";
}

double finite_probe(const SpectralField& c) {
  double acc = 0.0;
  for (const auto& z : c.coeffs) acc += std::abs(z.real()) + std::abs(z.imag());
  return acc;
}

// d^m/ds^m f(u(., t+s))|_{s=0} as Fourier coefficients, single m.
SpectralField nonlinearity_coeff(const KGEProblem& problem, const GridSpec& grid,
                                 const DerivativeBundle& bundle, int m) {
  if (m > bundle.k_max)
    throw std::invalid_argument("nonlinearity_time_derivatives: m exceeds bundle depth");
  const RealField& u = bundle.time_derivs[0];
  if (m == 0) {
    if (bundle.f_hat) return *bundle.f_hat;
    return forward_dft(grid, bundle.f_values);
  }
  const int M = grid.M;
  RealField d(M);
  if (m == 1) {
    const RealField f1 = nonlinearity_field(problem, grid, u, 1);
    const RealField& u1 = bundle.time_derivs[1];
    for (int j = 0; j < M; ++j) d[j] = f1[j] * u1[j];
  } else if (m == 2) {
    const RealField f1 = nonlinearity_field(problem, grid, u, 1);
    const RealField f2 = nonlinearity_field(problem, grid, u, 2);
    const RealField& u1 = bundle.time_derivs[1];
    const RealField& u2 = bundle.time_derivs[2];
    for (int j = 0; j < M; ++j) d[j] = f2[j] * u1[j] * u1[j] + f1[j] * u2[j];
  } else if (m == 3) {
    const RealField f1 = nonlinearity_field(problem, grid, u, 1);
    const RealField f2 = nonlinearity_field(problem, grid, u, 2);
    const RealField f3 = nonlinearity_field(problem, grid, u, 3);
    const RealField& u1 = bundle.time_derivs[1];
    const RealField& u2 = bundle.time_derivs[2];
    const RealField& u3 = bundle.time_derivs[3];
    for (int j = 0; j < M; ++j) {
      d[j] = f3[j] * u1[j] * u1[j] * u1[j] + 3.0 * f2[j] * u1[j] * u2[j] + f1[j] * u3[j];
    }
  } else if (m == 4) {
    const RealField f1 = nonlinearity_field(problem, grid, u, 1);
    const RealField f2 = nonlinearity_field(problem, grid, u, 2);
    const RealField f3 = nonlinearity_field(problem, grid, u, 3);
    const RealField f4 = nonlinearity_field(problem, grid, u, 4);
    const RealField& u1 = bundle.time_derivs[1];
    const RealField& u2 = bundle.time_derivs[2];
    const RealField& u3 = bundle.time_derivs[3];
    const RealField& u4 = bundle.time_derivs[4];
    for (int j = 0; j < M; ++j) {
      const double a1 = u1[j], a2 = u2[j], a3 = u3[j], a4 = u4[j];
      d[j] = f4[j] * a1 * a1 * a1 * a1 + 6.0 * f3[j] * a1 * a1 * a2 + 3.0 * f2[j] * a2 * a2 +
             4.0 * f2[j] * a1 * a3 + f1[j] * a4;
    }
  } else {
    throw std::invalid_argument("nonlinearity_time_derivatives: m must be in 0..4");
  }
  return forward_dft(grid, d);
}

}  // namespace

InstabilityError::InstabilityError(long step, double t)
    : std::runtime_error(instability_message(step, t)), step_(step), t_(t) {}

DerivativeBundle time_derivatives_of_u(const KGEProblem& problem, const GridSpec& grid,
                                       const SolverState& state, int k_max) {
  if (k_max < 0 || k_max > 4)
    throw std::invalid_argument("time_derivatives_of_u: k_max must be in 0..4");
  const int M = grid.M;
  const double eps2 = problem.epsilon * problem.epsilon;

  DerivativeBundle bundle;
  bundle.k_max = k_max;
  bundle.time_derivs.resize(static_cast<size_t>(k_max) + 1);

  bundle.time_derivs[0] = inverse_dft(grid, state.u);
  const RealField& u = bundle.time_derivs[0];
  bundle.f_values = nonlinearity_field(problem, grid, u, 0);
  if (k_max == 0) return bundle;

  bundle.time_derivs[1] = inverse_dft(grid, state.udot);
  if (k_max == 1) return bundle;

  const SpectralField uxx_hat = spectral_derivative(grid, state.u, 2);
  const RealField uxx = inverse_dft(grid, uxx_hat);
  RealField u2(M);
  for (int j = 0; j < M; ++j) u2[j] = (uxx[j] - u[j] / eps2 - bundle.f_values[j]) / eps2;
  bundle.time_derivs[2] = std::move(u2);
  if (k_max == 2) return bundle;

  const RealField udotxx = inverse_dft(grid, spectral_derivative(grid, state.udot, 2));
  const RealField f1 = nonlinearity_field(problem, grid, u, 1);
  const RealField& udot = bundle.time_derivs[1];
  RealField u3(M);
  for (int j = 0; j < M; ++j) {
    u3[j] = (udotxx[j] - udot[j] / eps2 - f1[j] * udot[j]) / eps2;
  }
  bundle.time_derivs[3] = std::move(u3);
  if (k_max == 3) return bundle;

  // u4 = (d_xx u2 - u2/eps^2 - d2) / eps^2 with d2 = f'' u1^2 + f' u2;
  // u2 in spectral form comes from the same identity, reusing f_hat.
  bundle.f_hat = forward_dft(grid, bundle.f_values);
  SpectralField u2_hat(M);
  for (int k = 0; k < M; ++k) {
    const double mu = grid.mode_by_index(k);
    u2_hat[k] = (-(mu * mu) * state.u[k] - state.u[k] / eps2 - (*bundle.f_hat)[k]) / eps2;
  }
  const RealField u2xx = inverse_dft(grid, spectral_derivative(grid, u2_hat, 2));
  const RealField f2 = nonlinearity_field(problem, grid, u, 2);
  const RealField& d1 = bundle.time_derivs[1];
  const RealField& d2 = bundle.time_derivs[2];
  RealField u4(M);
  for (int j = 0; j < M; ++j) {
    const double ddf = f2[j] * d1[j] * d1[j] + f1[j] * d2[j];
    u4[j] = (u2xx[j] - d2[j] / eps2 - ddf) / eps2;
  }
  bundle.time_derivs[4] = std::move(u4);
  return bundle;
}

NonlinearityDerivatives nonlinearity_time_derivatives(const KGEProblem& problem,
                                                      const GridSpec& grid,
                                                      const DerivativeBundle& bundle,
                                                      int m_max) {
  if (m_max < 0 || m_max > 4)
    throw std::invalid_argument("nonlinearity_time_derivatives: m_max must be in 0..4");
  NonlinearityDerivatives nd;
  nd.m_max = m_max;
  nd.coeffs.resize(static_cast<size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    nd.coeffs[static_cast<size_t>(m)] = nonlinearity_coeff(problem, grid, bundle, m);
  }
  return nd;
}

SolverState first_step(const KGEProblem& problem, const GridSpec& grid,
                       const WeightTable& weights, const SolverState& s0, bool dealias) {
  const int M = grid.M;
  const int m_max = weights.order - 2;

  const DerivativeBundle bundle = time_derivatives_of_u(problem, grid, s0, m_max);
  std::vector<SpectralField> fm(static_cast<size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    fm[static_cast<size_t>(m)] = nonlinearity_coeff(problem, grid, bundle, m);
    if (dealias) apply_two_thirds_dealias(grid, fm[static_cast<size_t>(m)]);
  }

  SolverState s1;
  s1.u = SpectralField(M);
  s1.udot = SpectralField(M);
  s1.t = s0.t + weights.tau;
  for (int k = 0; k < M; ++k) {
    const size_t kk = static_cast<size_t>(k);
    const double omega = weights.omega[kk];
    const double c = weights.cos_wt[kk];
    const double s = weights.sin_wt[kk];
    // udot already carries the 1/eps^2 scaling of the initial velocity, so
    // the homogeneous part is cos * u0 + sin/omega * udot0.
    std::complex<double> unew = c * s0.u[k] + (s / omega) * s0.udot[k];
    std::complex<double> vnew = -(omega * s) * s0.u[k] + c * s0.udot[k];
    for (int m = 0; m <= m_max; ++m) {
      const size_t mm = static_cast<size_t>(m);
      unew -= weights.b[mm][kk] * fm[mm][k];
      vnew -= weights.bdot[mm][kk] * fm[mm][k];
    }
    s1.u[k] = unew;
    s1.udot[k] = vnew;
  }
  return s1;
}

SolverState main_step(const KGEProblem& problem, const GridSpec& grid,
                      const WeightTable& weights, const StepPair& pair, bool dealias) {
  const int M = grid.M;
  const int n_half = weights.half_order();
  const double dt = pair.curr.t - pair.prev.t;
  if (std::abs(dt - weights.tau) > 1e-6 * std::abs(weights.tau))
    throw std::invalid_argument("main_step: pair spacing does not match the weight table");

  const DerivativeBundle bundle =
      time_derivatives_of_u(problem, grid, pair.curr, weights.order - 2);
  std::vector<SpectralField> fm(static_cast<size_t>(n_half));
  for (int j = 0; j < n_half; ++j) {
    fm[static_cast<size_t>(j)] = nonlinearity_coeff(problem, grid, bundle, 2 * j);
    if (dealias) apply_two_thirds_dealias(grid, fm[static_cast<size_t>(j)]);
  }

  SolverState next;
  next.u = SpectralField(M);
  next.udot = SpectralField(M);
  next.t = pair.curr.t + weights.tau;
  for (int k = 0; k < M; ++k) {
    const size_t kk = static_cast<size_t>(k);
    const double gamma = weights.gamma_wt[kk];
    const double ws = weights.omega[kk] * weights.sin_wt[kk];
    // 2cos(omega tau) u^n written as 2u^n - gamma u^n; see build_weight_table.
    std::complex<double> unew =
        2.0 * pair.curr.u[k] - pair.prev.u[k] - gamma * pair.curr.u[k];
    // The sin term acts on the position mode; this is what the
    // variation-of-constants derivation gives, and it is what keeps the
    // constant-nonlinearity runs exact.
    std::complex<double> vnew = pair.prev.udot[k] - 2.0 * ws * pair.curr.u[k];
    for (int j = 0; j < n_half; ++j) {
      const size_t jj = static_cast<size_t>(j);
      unew -= weights.a[jj][kk] * fm[jj][k];
      vnew -= weights.adot[jj][kk] * fm[jj][k];
    }
    next.u[k] = unew;
    next.udot[k] = vnew;
  }
  return next;
}

SolverState integrate(const KGEProblem& problem, const GridSpec& grid, double tau, double T,
                      int order_2N, const IntegrateOptions& opts) {
  if (!(T > 0.0)) throw std::invalid_argument("integrate: requires T > 0");
  if (!(tau > 0.0)) throw std::invalid_argument("integrate: requires tau > 0");
  const double ratio = T / tau;
  const long steps = std::lround(ratio);
  if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-9)
    throw std::invalid_argument("integrate: T/tau is not an integer");

  const WeightTable weights = build_weight_table(grid, problem.epsilon, tau, order_2N);

  double omega_max = 0.0;
  for (const double w : weights.omega) omega_max = std::max(omega_max, w);
  if (omega_max * tau > std::numbers::pi / 2.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "note: max omega*tau = %.3g exceeds the pi/2 analysis regime "
                  "(tau <~ min{eps^2, h eps}); proceeding",
                  omega_max * tau);
    if (opts.stability_warning_sink) {
      opts.stability_warning_sink(buf);
    } else {
      std::fprintf(stderr, "%s\n", buf);
    }
  }

  SolverState prev = initial_state(problem, grid);
  if (opts.observer) opts.observer(prev);

  SolverState curr = first_step(problem, grid, weights, prev, opts.dealias);
  curr.t = tau;
  if (!std::isfinite(finite_probe(curr.u))) throw InstabilityError(1, curr.t);
  if (opts.observer) opts.observer(curr);

  for (long n = 1; n < steps; ++n) {
    SolverState next = main_step(problem, grid, weights, StepPair{prev, curr}, opts.dealias);
    next.t = static_cast<double>(n + 1) * tau;
    if (!std::isfinite(finite_probe(next.u))) throw InstabilityError(n + 1, next.t);
    prev = std::move(curr);
    curr = std::move(next);
    if (opts.observer) opts.observer(curr);
  }
  return curr;
}

}  // namespace kgewi

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgewi/problem.hpp"
#include "kgewi/weights.hpp"

namespace kgewi {

/// Two consecutive levels of the three-level recurrence; curr.t - prev.t = tau.
struct StepPair {
  SolverState prev;
  SolverState curr;
};

/// Grid values of d^k u / dt^k, k = 0..k_max, obtained from the equation:
///   d^2 u/dt^2 = (u_xx - u/eps^2 - f(u)) / eps^2
/// and its time derivatives. f(u) (and its transform, when the pipeline
/// produced it) ride along so callers do not repeat work.
struct DerivativeBundle {
  int k_max = 0;
  std::vector<RealField> time_derivs;
  RealField f_values;
  std::optional<SpectralField> f_hat;
};

/// Fourier coefficients of d^m/ds^m f(u(., t+s)) at s = 0, m = 0..m_max.
struct NonlinearityDerivatives {
  int m_max = 0;
  std::vector<SpectralField> coeffs;
};

/// Thrown when a NaN/Inf shows up in the evolving state (instability signal).
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(long step, double t);
  long step() const { return step_; }
  double time() const { return t_; }

 private:
  long step_;
  double t_;
};

DerivativeBundle time_derivatives_of_u(const KGEProblem& problem, const GridSpec& grid,
                                       const SolverState& state, int k_max);

/// Chain rule through order 4 (u_k = d^k u/dt^k):
///   d0 = f(u)
///   d1 = f' u1
///   d2 = f'' u1^2 + f' u2
///   d3 = f''' u1^3 + 3 f'' u1 u2 + f' u3
///   d4 = f'''' u1^4 + 6 f''' u1^2 u2 + 3 f'' u2^2 + 4 f'' u1 u3 + f' u4
NonlinearityDerivatives nonlinearity_time_derivatives(const KGEProblem& problem,
                                                      const GridSpec& grid,
                                                      const DerivativeBundle& bundle, int m_max);

/// Variation-of-constants first step from s0, Taylor terms m = 0..2N-2.
SolverState first_step(const KGEProblem& problem, const GridSpec& grid,
                       const WeightTable& weights, const SolverState& s0,
                       bool dealias = false);

/// Symmetric three-level main step; even Taylor terms m = 0, 2, .., 2N-2
/// evaluated at the middle level. Feeding (prev = u^{n+1}, curr = u^n) with a
/// table built at -tau runs the recurrence backwards.
SolverState main_step(const KGEProblem& problem, const GridSpec& grid,
                      const WeightTable& weights, const StepPair& pair,
                      bool dealias = false);

struct IntegrateOptions {
  bool dealias = false;
  /// Called with every state, including the initial one.
  std::function<void(const SolverState&)> observer;
  /// The error analysis assumes max_l omega_l tau <= pi/2 (equivalent to
  /// tau <= tau_0 min{eps^2, h eps}). Running beyond it is allowed -- the
  /// schemes are observed stable well past the bound -- but it is surfaced
  /// here: the message goes to the sink, or to stderr when unset.
  std::function<void(const std::string&)> stability_warning_sink;
};

/// Runs the order-2N scheme from t = 0 to t = T. T/tau must be within 1e-9 of
/// an integer. Throws InstabilityError when the state stops being finite.
SolverState integrate(const KGEProblem& problem, const GridSpec& grid, double tau, double T,
                      int order_2N, const IntegrateOptions& opts = {});

}  // namespace kgewi

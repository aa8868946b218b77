#pragma once

#include <array>
#include <vector>

#include "kgewi/grid.hpp"

namespace kgewi {

/// Per-mode frequencies omega_l = sqrt(eps^2 mu_l^2 + 1) / eps^2, FFT order.
/// omega_l >= 1/eps^2 > 0, so divisions by omega are always safe.
struct ModeFrequencies {
  std::vector<double> omega;
};

ModeFrequencies mode_frequencies(const GridSpec& grid, double epsilon);

/// Oscillatory moments for one (omega, tau):
///   S_m = int_0^tau w^m sin(omega (tau - w)) dw,
///   C_m = int_0^tau w^m cos(omega (tau - w)) dw,   m = 0..m_max (<= 6).
struct MomentTable {
  int m_max = 0;
  std::array<double, 7> S{};
  std::array<double, 7> C{};
};

/// Stable evaluation: Maclaurin series in omega*tau below |omega*tau| = 0.5
/// (the closed forms cancel catastrophically there), the integration-by-parts
/// recurrence S_m = tau^m/omega - (m/omega) C_{m-1}, C_m = (m/omega) S_{m-1}
/// above it. Negative tau is allowed (time-reversed stepping).
MomentTable moment_integrals(double omega, double tau, int m_max);

/// All per-mode step coefficients for one (epsilon, tau, order), reusable
/// across every time step. Memory O(M * N).
///
/// Main step (even m = 2j, j = 0..N-1):
///   a[j]    = 2 S_{2j} / (eps^2 omega (2j)!)
///   adot[j] = 2 C_{2j} / (eps^2 (2j)!)
/// First step (m = 0..2N-2):
///   b[m]    = S_m / (eps^2 omega m!)
///   bdot[m] = C_m / (eps^2 m!)
struct WeightTable {
  int order = 4;  // 2N, one of {2, 4, 6}
  double epsilon = 1.0;
  double tau = 0.0;
  std::vector<double> omega;
  std::vector<double> cos_wt;    // cos(omega tau)
  std::vector<double> sin_wt;    // sin(omega tau)
  std::vector<double> gamma_wt;  // 2 - 2cos(omega tau) = 4 sin^2(omega tau / 2)
  std::array<std::vector<double>, 3> a;
  std::array<std::vector<double>, 3> adot;
  std::array<std::vector<double>, 5> b;
  std::array<std::vector<double>, 5> bdot;

  int half_order() const { return order / 2; }
};

/// order_2N in {2, 4, 6}; tau != 0 (negative tau builds the table for the
/// reversed recurrence).
WeightTable build_weight_table(const GridSpec& grid, double epsilon, double tau, int order_2N);

}  // namespace kgewi

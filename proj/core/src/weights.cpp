#include "kgewi/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace kgewi {

ModeFrequencies mode_frequencies(const GridSpec& grid, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("mode_frequencies: epsilon must be positive");
  const double eps2 = epsilon * epsilon;
  ModeFrequencies mf;
  mf.omega.resize(static_cast<size_t>(grid.M));
  for (int k = 0; k < grid.M; ++k) {
    const double mu = grid.mode_by_index(k);
    mf.omega[static_cast<size_t>(k)] = std::sqrt(eps2 * mu * mu + 1.0) / eps2;
  }
  return mf;
}

namespace {

// |x| below which the series evaluation is used. Two failure modes pin the
// switch point: below it, the closed forms cancel (error ~ulp/x^2); above
// it, the upward recurrence amplifies roundoff by m!/x^m across the m <= 6
// levels, which only stays <= 1 for x >= 3. The series' own alternation
// costs at most a factor ~30 at x = 3.
constexpr double kSeriesThreshold = 3.0;

// Series from S_m = tau^{m+1} int_0^1 v^m sin(x(1-v)) dv with x = omega tau:
//   S_m / tau^{m+1} = sum_k (-1)^k x^{2k+1} m! / (m+2k+2)!
//   C_m / tau^{m+1} = sum_k (-1)^k x^{2k}   m! / (m+2k+1)!
// Terms fall like x^2 / (m+2k)^2; at |x| <= 0.5 a dozen terms reach 1e-17.
void moments_by_series(double x, double tau, int m_max, MomentTable& mt) {
  double tau_pow = tau;  // tau^{m+1}
  for (int m = 0; m <= m_max; ++m) {
    double term_c = 1.0 / static_cast<double>(m + 1);
    double term_s = x / (static_cast<double>(m + 1) * static_cast<double>(m + 2));
    double sum_c = term_c;
    double sum_s = term_s;
    for (int k = 1; k <= 40; ++k) {
      term_c *= -x * x / (static_cast<double>(m + 2 * k) * static_cast<double>(m + 2 * k + 1));
      term_s *= -x * x / (static_cast<double>(m + 2 * k + 1) * static_cast<double>(m + 2 * k + 2));
      sum_c += term_c;
      sum_s += term_s;
      if (std::abs(term_c) < 1e-20 * std::abs(sum_c) &&
          std::abs(term_s) < 1e-20 * (std::abs(sum_s) + 1e-300)) {
        break;
      }
    }
    mt.S[static_cast<size_t>(m)] = tau_pow * sum_s;
    mt.C[static_cast<size_t>(m)] = tau_pow * sum_c;
    tau_pow *= tau;
  }
}

void moments_by_recurrence(double omega, double tau, int m_max, MomentTable& mt) {
  const double x = omega * tau;
  const double half = std::sin(0.5 * x);
  mt.S[0] = 2.0 * half * half / omega;  // (1 - cos x)/omega without cancellation
  mt.C[0] = std::sin(x) / omega;
  double tau_pow = 1.0;  // tau^m
  for (int m = 1; m <= m_max; ++m) {
    tau_pow *= tau;
    mt.S[static_cast<size_t>(m)] =
        tau_pow / omega - static_cast<double>(m) / omega * mt.C[static_cast<size_t>(m - 1)];
    mt.C[static_cast<size_t>(m)] =
        static_cast<double>(m) / omega * mt.S[static_cast<size_t>(m - 1)];
  }
}

}  // namespace

MomentTable moment_integrals(double omega, double tau, int m_max) {
  if (!(omega > 0.0)) throw std::invalid_argument("moment_integrals: omega must be positive");
  if (m_max < 0 || m_max > 6) throw std::invalid_argument("moment_integrals: m_max must be in 0..6");
  MomentTable mt;
  mt.m_max = m_max;
  const double x = omega * tau;
  if (std::abs(x) < kSeriesThreshold) {
    moments_by_series(x, tau, m_max, mt);
  } else {
    moments_by_recurrence(omega, tau, m_max, mt);
  }
  return mt;
}

WeightTable build_weight_table(const GridSpec& grid, double epsilon, double tau, int order_2N) {
  if (order_2N != 2 && order_2N != 4 && order_2N != 6)
    throw std::invalid_argument("build_weight_table: order must be 2, 4 or 6");
  if (tau == 0.0) throw std::invalid_argument("build_weight_table: tau must be nonzero");

  const int n_half = order_2N / 2;
  const int m_max = order_2N - 2;
  const double eps2 = epsilon * epsilon;
  const size_t m = static_cast<size_t>(grid.M);

  WeightTable wt;
  wt.order = order_2N;
  wt.epsilon = epsilon;
  wt.tau = tau;
  wt.omega = mode_frequencies(grid, epsilon).omega;
  wt.cos_wt.resize(m);
  wt.sin_wt.resize(m);
  wt.gamma_wt.resize(m);
  for (int j = 0; j < n_half; ++j) {
    wt.a[static_cast<size_t>(j)].resize(m);
    wt.adot[static_cast<size_t>(j)].resize(m);
  }
  for (int i = 0; i <= m_max; ++i) {
    wt.b[static_cast<size_t>(i)].resize(m);
    wt.bdot[static_cast<size_t>(i)].resize(m);
  }

  double factorial[7];
  factorial[0] = 1.0;
  for (int i = 1; i <= 6; ++i) factorial[i] = factorial[i - 1] * static_cast<double>(i);

  for (size_t k = 0; k < m; ++k) {
    const double omega = wt.omega[k];
    const double x = omega * tau;
    wt.cos_wt[k] = std::cos(x);
    wt.sin_wt[k] = std::sin(x);
    // Stored with full relative accuracy at small x. Writing the main-step
    // recurrence through gamma keeps the accumulated phase error at
    // O(omega T ulp) instead of O(n ulp / sin(omega tau)) over n steps.
    const double half = std::sin(0.5 * x);
    wt.gamma_wt[k] = 4.0 * half * half;
    const MomentTable mt = moment_integrals(omega, tau, m_max);
    for (int j = 0; j < n_half; ++j) {
      const int mm = 2 * j;
      wt.a[static_cast<size_t>(j)][k] =
          2.0 * mt.S[static_cast<size_t>(mm)] / (eps2 * omega * factorial[mm]);
      wt.adot[static_cast<size_t>(j)][k] =
          2.0 * mt.C[static_cast<size_t>(mm)] / (eps2 * factorial[mm]);
    }
    for (int i = 0; i <= m_max; ++i) {
      wt.b[static_cast<size_t>(i)][k] =
          mt.S[static_cast<size_t>(i)] / (eps2 * omega * factorial[i]);
      wt.bdot[static_cast<size_t>(i)][k] = mt.C[static_cast<size_t>(i)] / (eps2 * factorial[i]);
    }
  }
  return wt;
}

}  // namespace kgewi

// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion (plus supplementary checks).
// References are cached under ./acceptance-cache (override with
// KGEWI_ACCEPTANCE_CACHE) so re-runs are fast.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "kgewi/ewi.hpp"
#include "kgewi/output.hpp"
#include "kgewi/rk4.hpp"
#include "kgewi/studies.hpp"
#include "support/closed_forms.hpp"
#include "support/dft_oracle.hpp"
#include "support/quadrature.hpp"
#include "support/test_problems.hpp"

using namespace kgewi;
using namespace kgewi::testing;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;

  explicit Criterion(std::string n) : name(std::move(n)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "  ok   " : "  BAD  ") + what);
  }
  void info(const std::string& what) { notes.push_back("  info " + what); }
};

std::vector<Criterion> g_results;
bool g_verbose = false;
std::string g_filter;

void report(Criterion c) {
  std::printf("%s  %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str());
  if (g_verbose || !c.pass) {
    for (const auto& n : c.notes) std::printf("%s\n", n.c_str());
  }
  g_results.push_back(std::move(c));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

ProblemSection benchmark_section(double epsilon) {
  ProblemSection ps;
  ps.a = -32.0;
  ps.b = 32.0;
  ps.problem = gaussian_cubic_problem(epsilon);
  return ps;
}

ReferencePolicy cache_policy(double tau_ref) {
  ReferencePolicy rp;
  const char* env = std::getenv("KGEWI_ACCEPTANCE_CACHE");
  rp.cache_dir = env != nullptr ? env : "acceptance-cache";
  rp.tau_ref = tau_ref;
  rp.h_ref = 1.0 / 16.0;
  return rp;
}

bool within_factor(double value, double expected, double factor) {
  return value >= expected / factor && value <= expected * factor;
}

// ---------------------------------------------------------------------------

void criterion_1_table1() {
  Criterion c{"criterion 1: Table 1 temporal convergence (eps = 0.5, h = 1/16, T = 2)"};

  StudyConfig st;
  st.kind = StudyConfig::Kind::Temporal;
  st.methods = {MethodSpec::parse("ewi4"), MethodSpec::parse("ewi6")};
  st.T = 2.0;
  st.epsilon0 = 0.5;
  st.epsilon_levels = 1;
  st.tau0 = 0.1;
  st.tau_levels = 4;
  st.h = 1.0 / 16.0;
  st.energy_stride = 0;

  const StudyResult run = run_temporal_study(st, benchmark_section(0.5), cache_policy(2e-4));
  const double expected4[4] = {4.55e-2, 1.60e-3, 9.52e-5, 5.90e-6};
  const double expected6[4] = {4.50e-3, 2.43e-5, 3.74e-7, 5.74e-9};
  for (int j = 0; j < 4; ++j) {
    const ErrorRecord& r4 = run.records[static_cast<size_t>(j)];
    const ErrorRecord& r6 = run.records[static_cast<size_t>(4 + j)];
    c.require(within_factor(r4.h1_error, expected4[j], 2.0),
              "ewi4 tau=" + fmt(r4.tau) + ": " + fmt(r4.h1_error) + " within 2x of " +
                  fmt(expected4[j]));
    c.require(within_factor(r6.h1_error, expected6[j], 2.0),
              "ewi6 tau=" + fmt(r6.tau) + ": " + fmt(r6.h1_error) + " within 2x of " +
                  fmt(expected6[j]));
  }
  for (int j = 2; j < 4; ++j) {
    c.require(run.records[static_cast<size_t>(j)].rate.value_or(0.0) >= 3.7,
              "ewi4 rate " + fmt(run.records[static_cast<size_t>(j)].rate.value_or(0.0)) +
                  " >= 3.7");
    c.require(run.records[static_cast<size_t>(4 + j)].rate.value_or(0.0) >= 5.7,
              "ewi6 rate " + fmt(run.records[static_cast<size_t>(4 + j)].rate.value_or(0.0)) +
                  " >= 5.7");
  }
  report(std::move(c));
}

void criterion_2_table3() {
  Criterion c{"criterion 2: Table 3 spatial spectral accuracy (tau = 1e-5, T = 2, eps = 0.1)"};

  StudyConfig st;
  st.kind = StudyConfig::Kind::Spatial;
  st.methods = {MethodSpec::parse("ewi4")};
  st.T = 2.0;
  st.epsilon0 = 0.1;
  st.epsilon_levels = 1;
  st.h0 = 0.5;
  st.h_levels = 3;
  st.tau = 1e-5;
  st.energy_stride = 0;

  const StudyResult run = run_spatial_study(st, benchmark_section(0.1), cache_policy(1e-5));
  const double e_half = run.records[0].h1_error;
  const double e_quarter = run.records[1].h1_error;
  const double e_eighth = run.records[2].h1_error;
  c.require(e_half > 5e-2 && e_half < 2e1,
            "error at h=1/2 is O(1): " + fmt(e_half) + " (nominal 7.28e-1)");
  c.require(e_quarter <= 5e-3, "error at h=1/4: " + fmt(e_quarter) + " <= 5e-3 (nominal 4.18e-4)");
  c.require(e_eighth <= 1e-6, "error at h=1/8: " + fmt(e_eighth) + " <= 1e-6 (nominal 6.18e-8)");
  report(std::move(c));
}

void criterion_3_table4() {
  Criterion c{"criterion 3: Table 4 meshing strategy (eps, tau) = (0.05/2^k, 1.25e-3/4^k)"};

  StudyConfig st;
  st.kind = StudyConfig::Kind::Temporal;
  st.methods = {MethodSpec::parse("ewi4"), MethodSpec::parse("ewi6"), MethodSpec::parse("ewi2"),
                MethodSpec::parse("rk4")};
  st.T = 2.0;
  st.epsilon0 = 0.05;
  st.epsilon_levels = 3;
  st.tau0 = 1.25e-3;
  st.tau_levels = 3;
  st.epsilon_tau_coupling = 4.0;
  st.h = 1.0 / 16.0;
  st.energy_stride = 0;

  const StudyResult run = run_temporal_study(st, benchmark_section(0.05), cache_policy(1e-5));
  // records: method-major, then epsilon rows, then the tau ladder
  const auto rec = [&](int method, int row, int j) -> const ErrorRecord& {
    return run.records[static_cast<size_t>(method * 9 + row * 3 + j)];
  };

  for (int row = 0; row < 3; ++row) {
    const double d4 = rec(0, row, 0).h1_error;
    c.require(d4 >= 1e-3 && d4 <= 1e-2,
              "ewi4 diagonal k=" + std::to_string(row) + ": " + fmt(d4) + " in [1e-3, 1e-2]");
    for (int j = 1; j < 3; ++j) {
      const double rate = rec(0, row, j).rate.value_or(0.0);
      c.require(rate >= 3.7 && rate <= 4.3,
                "ewi4 row " + std::to_string(row) + " rate " + fmt(rate) + " = 4.0 +- 0.3");
    }
    const double d6 = rec(1, row, 0).h1_error;
    c.require(d6 <= 1e-4, "ewi6 diagonal k=" + std::to_string(row) + ": " + fmt(d6) + " <= 1e-4");
    for (int j = 1; j < 3; ++j) {
      const double rate = rec(1, row, j).rate.value_or(0.0);
      c.require(rate >= 5.6 && rate <= 6.4,
                "ewi6 row " + std::to_string(row) + " rate " + fmt(rate) + " = 6.0 +- 0.4");
    }
    const double d2 = rec(2, row, 0).h1_error;
    c.require(d2 >= 10.0 * d4, "ewi2 diagonal k=" + std::to_string(row) + ": " + fmt(d2) +
                                   " >= 10x ewi4 (" + fmt(d4) + ")");
    for (int j = 1; j < 3; ++j) {
      const double rate = rec(2, row, j).rate.value_or(0.0);
      c.require(rate >= 1.7 && rate <= 2.3,
                "ewi2 row " + std::to_string(row) + " rate " + fmt(rate) + " = 2.0 +- 0.3");
    }
  }
  const double rk_head = rec(3, 0, 0).h1_error;
  c.require(rk_head >= 1.0,
            "rk4 at (0.05, 1.25e-3): " + fmt(rk_head) + " >= 1e0 (nominal 3.53e0)");
  report(std::move(c));
}

void criterion_4_constant_exactness() {
  Criterion c{"criterion 4: constant-nonlinearity runs are exact (H1 < 1e-11 after 100 steps)"};
  for (const double eps : {1.0, 0.1}) {
    const GridSpec grid = build_grid(-32.0, 32.0, 64);
    const KGEProblem p = constant_forcing_problem(eps, 1.0);
    const ModeFrequencies mf = mode_frequencies(grid, eps);
    double omega_max = 0.0;
    for (const double w : mf.omega) omega_max = std::max(omega_max, w);
    const double tau = 0.9 * (std::numbers::pi / 2.0) / omega_max;
    for (const int order : {2, 4, 6}) {
      const SolverState end = integrate(p, grid, tau, 100.0 * tau, order);
      const SolverState exact =
          constant_forcing_solution(p, grid, initial_state(p, grid), mf.omega, end.t);
      SpectralField diff(grid.M);
      for (int k = 0; k < grid.M; ++k) diff[k] = end.u[k] - exact.u[k];
      const double err = h1_norm(grid, diff);
      c.require(err < 1e-11, "eps=" + fmt(eps) + " order " + std::to_string(order) +
                                 ": H1 error " + fmt(err) + " < 1e-11");
    }
  }
  report(std::move(c));
}

void criterion_5_time_symmetry() {
  Criterion c{"criterion 5: 50-step forward/backward round trip (cubic, eps = 0.5, tau = 1e-2)"};
  const GridSpec grid = build_grid(-32.0, 32.0, 512);
  const KGEProblem p = gaussian_cubic_problem(0.5);
  const double tau = 1e-2;
  const int n = 50;
  const WeightTable fwd = build_weight_table(grid, 0.5, tau, 4);
  const WeightTable bwd = build_weight_table(grid, 0.5, -tau, 4);

  SolverState prev = initial_state(p, grid);
  const SolverState s0 = prev;
  SolverState curr = first_step(p, grid, fwd, prev);
  for (int i = 1; i < n; ++i) {
    SolverState next = main_step(p, grid, fwd, StepPair{prev, curr});
    prev = curr;
    curr = next;
  }
  SolverState hi = curr;
  SolverState lo = prev;
  for (int i = n - 1; i >= 1; --i) {
    SolverState down = main_step(p, grid, bwd, StepPair{hi, lo});
    hi = lo;
    lo = down;
  }
  SpectralField diff(grid.M);
  for (int k = 0; k < grid.M; ++k) diff[k] = lo.u[k] - s0.u[k];
  const double rel = h1_norm(grid, diff) / h1_norm(grid, s0.u);
  c.require(rel < 1e-10, "relative H1 recovery error " + fmt(rel) + " < 1e-10");
  report(std::move(c));
}

void criterion_6_weight_oracle() {
  Criterion c{"criterion 6: moment integrals vs adaptive quadrature and closed forms"};
  std::mt19937_64 rng(20240810);
  std::uniform_real_distribution<double> log_x(-8.0, 1.0);
  std::uniform_real_distribution<double> log_tau(-3.0, 0.0);
  double worst_scaled = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double x = std::pow(10.0, log_x(rng));
    const double tau = std::pow(10.0, log_tau(rng));
    const double omega = x / tau;
    const MomentTable mt = moment_integrals(omega, tau, 6);
    double tau_pow = tau;
    for (int m = 0; m <= 6; ++m) {
      worst_scaled = std::max(
          worst_scaled,
          std::abs(mt.S[static_cast<size_t>(m)] - moment_oracle_sin(omega, tau, m)) / tau_pow);
      worst_scaled = std::max(
          worst_scaled,
          std::abs(mt.C[static_cast<size_t>(m)] - moment_oracle_cos(omega, tau, m)) / tau_pow);
      tau_pow *= tau;
    }
  }
  c.require(worst_scaled <= 1e-12, "worst scaled |moment - quadrature| = " + fmt(worst_scaled) +
                                       " <= 1e-12 over 200 random (omega, tau)");

  double worst_rel = 0.0;
  std::uniform_real_distribution<double> log_x2(-2.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = std::pow(10.0, log_x2(rng));
    const double tau = std::pow(10.0, log_tau(rng));
    const double omega = x / tau;
    const MomentTable mt = moment_integrals(omega, tau, 2);
    const double cf[4] = {closed_form_S1(omega, tau), closed_form_C1(omega, tau),
                          closed_form_S2(omega, tau), closed_form_C2(omega, tau)};
    const double got[4] = {mt.S[1], mt.C[1], mt.S[2], mt.C[2]};
    for (int i = 0; i < 4; ++i) {
      worst_rel = std::max(worst_rel, std::abs(got[i] - cf[i]) / std::abs(cf[i]));
    }
  }
  c.require(worst_rel <= 1e-13,
            "worst closed-form relative deviation = " + fmt(worst_rel) + " <= 1e-13");
  report(std::move(c));
}

void criterion_7_energy() {
  Criterion c{"criterion 7: energy behavior (eps = 0.05, h = 1/8, T = 2)"};

  StudyConfig st;
  st.kind = StudyConfig::Kind::Energy;
  st.methods = {MethodSpec::parse("ewi4"), MethodSpec::parse("ewi6"), MethodSpec::parse("rk4")};
  st.T = 2.0;
  st.epsilon0 = 0.05;
  st.tau0 = 2.5e-3;
  st.tau_levels = 3;
  st.h = 1.0 / 8.0;
  st.energy_stride = 1;

  const StudyResult run = run_energy_trace(st, benchmark_section(0.05), cache_policy(1e-5));
  // traces: ewi4 x3, ewi6 x3, rk4 x3 (tau, tau/2, tau/4)
  const auto trace = [&](int method, int j) -> const EnergyTrace& {
    return run.traces[static_cast<size_t>(method * 3 + j)];
  };
  for (int method = 0; method < 2; ++method) {
    const std::string tag = trace(method, 0).method.tag();
    for (int j = 0; j < 3; ++j) {
      c.require(trace(method, j).max_rel_error < 0.5,
                tag + " tau/" + std::to_string(1 << j) + ": max |E-E0|/E0 = " +
                    fmt(trace(method, j).max_rel_error) + " bounded over [0, 2]");
    }
    c.require(trace(method, 0).max_rel_error > trace(method, 1).max_rel_error &&
                  trace(method, 1).max_rel_error > trace(method, 2).max_rel_error,
              tag + ": max energy error decreases monotonically across tau, tau/2, tau/4");
  }
  for (int j = 0; j < 3; ++j) {
    const EnergyTrace& rk = trace(2, j);
    for (int method = 0; method < 2; ++method) {
      const EnergyTrace& ew = trace(method, j);
      c.require(rk.points.back().rel_error >= 10.0 * ew.points.back().rel_error,
                "rk4 final energy error " + fmt(rk.points.back().rel_error) + " >= 10x " +
                    ew.method.tag() + " (" + fmt(ew.points.back().rel_error) + ") at tau/" +
                    std::to_string(1 << j));
    }
    // growth: the rk4 error keeps growing along the run
    const size_t half = rk.points.size() / 2;
    const size_t quarter = rk.points.size() / 4;
    c.require(rk.points.back().rel_error >= 0.95 * rk.points[half].rel_error &&
                  rk.points[half].rel_error >= 0.95 * rk.points[quarter].rel_error,
              "rk4 energy error grows along the run at tau/" + std::to_string(1 << j));
  }
  report(std::move(c));
}

void criterion_8_oracle_equivalence() {
  Criterion c{"criterion 8: transform and derivative-bundle oracle equivalence"};

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (const int M : {4, 8, 16, 32, 64}) {
    const GridSpec g = build_grid(-3.0, 7.0, M);
    RealField v(M);
    for (int j = 0; j < M; ++j) v[j] = dist(rng);
    const SpectralField fast = forward_dft(g, v);
    const SpectralField direct = forward_dft_oracle(g, v);
    double scale = 0.0, diff = 0.0;
    for (int k = 0; k < M; ++k) {
      scale = std::max(scale, std::abs(direct[k]));
      diff = std::max(diff, std::abs(fast[k] - direct[k]));
    }
    worst = std::max(worst, diff / scale);

    const auto back_fast = inverse_dft_complex(g, fast);
    const auto back_direct = inverse_dft_oracle(g, direct);
    scale = 0.0;
    diff = 0.0;
    for (int j = 0; j < M; ++j) {
      scale = std::max(scale, std::abs(back_direct[static_cast<size_t>(j)]));
      diff = std::max(diff,
                      std::abs(back_fast[static_cast<size_t>(j)] -
                               back_direct[static_cast<size_t>(j)]));
    }
    worst = std::max(worst, diff / scale);
  }
  c.require(worst < 1e-13,
            "transforms vs direct O(M^2) summation, M <= 64: worst " + fmt(worst) + " < 1e-13");

  // derivative bundle vs RK4 micro-trajectory finite differences
  const GridSpec grid = build_grid(-32.0, 32.0, 128);
  const KGEProblem p = gaussian_cubic_problem(0.5);
  const DerivativeBundle bundle = time_derivatives_of_u(p, grid, initial_state(p, grid), 4);

  const auto sample = [&](double t, int substeps) -> RealField {
    if (t == 0.0) return inverse_dft(grid, initial_state(p, grid).u);
    KGEProblem q = p;
    if (t < 0.0) {
      q.phi2 = [](double x) { return -3.0 * std::exp(-x * x); };
    }
    return inverse_dft(grid, integrate_rk4(q, grid, std::abs(t) / substeps, std::abs(t)).u);
  };
  const auto max_abs = [](const RealField& f) {
    double m = 0.0;
    for (int j = 0; j < f.size(); ++j) m = std::max(m, std::abs(f[j]));
    return m;
  };

  {
    const double dt = 1e-6;
    const RealField up = sample(dt, 1), u0 = sample(0.0, 1), um = sample(-dt, 1);
    double w = 0.0;
    for (int j = 0; j < grid.M; ++j) {
      w = std::max(w, std::abs((up[j] - 2.0 * u0[j] + um[j]) / (dt * dt) -
                               bundle.time_derivs[2][j]));
    }
    c.require(w / max_abs(bundle.time_derivs[2]) < 1e-3,
              "d2u/dt2 vs RK4 micro-FD: rel " + fmt(w / max_abs(bundle.time_derivs[2])) +
                  " < 1e-3");
  }
  {
    const double dt = 3e-4;
    const RealField u2p = sample(2 * dt, 20), up = sample(dt, 10), um = sample(-dt, 10),
                    u2m = sample(-2 * dt, 20);
    double w = 0.0;
    for (int j = 0; j < grid.M; ++j) {
      const double fd = (u2p[j] - 2.0 * up[j] + 2.0 * um[j] - u2m[j]) / (2.0 * dt * dt * dt);
      w = std::max(w, std::abs(fd - bundle.time_derivs[3][j]));
    }
    c.require(w / max_abs(bundle.time_derivs[3]) < 1e-3,
              "d3u/dt3 vs RK4 micro-FD: rel " + fmt(w / max_abs(bundle.time_derivs[3])) +
                  " < 1e-3");
  }
  {
    const double dt = 1.2e-3;
    const RealField u2p = sample(2 * dt, 40), up = sample(dt, 20), u0 = sample(0.0, 1),
                    um = sample(-dt, 20), u2m = sample(-2 * dt, 40);
    double w = 0.0;
    for (int j = 0; j < grid.M; ++j) {
      const double fd =
          (u2p[j] - 4.0 * up[j] + 6.0 * u0[j] - 4.0 * um[j] + u2m[j]) / (dt * dt * dt * dt);
      w = std::max(w, std::abs(fd - bundle.time_derivs[4][j]));
    }
    c.require(w / max_abs(bundle.time_derivs[4]) < 1e-3,
              "d4u/dt4 vs RK4 micro-FD: rel " + fmt(w / max_abs(bundle.time_derivs[4])) +
                  " < 1e-3");
  }
  report(std::move(c));
}

// ---------------------------------------------------------------------------

void supplementary_reference_convergence() {
  Criterion c{"supplementary: reference self-refinement (eps = 0.5)"};
  const GridSpec grid = build_grid(-32.0, 32.0, 1024);
  const KGEProblem p = gaussian_cubic_problem(0.5);
  const ReferenceSolution a = compute_reference(p, grid, 2.0, 1.6e-3);
  const ReferenceSolution b = compute_reference(p, grid, 2.0, 8e-4);
  const SpectralField ca = forward_dft(grid, a.u);
  const SpectralField cb = forward_dft(grid, b.u);
  SpectralField d(grid.M);
  for (int k = 0; k < grid.M; ++k) d[k] = ca[k] - cb[k];
  const double diff = h1_norm(grid, d);
  c.require(diff < 1e-11,
            "halving tau_ref (1.6e-3 -> 8e-4) moves the reference by " + fmt(diff) + " < 1e-11");
  c.info("at the default tau_ref = 1e-5 the three-level roundoff floor (~8e-9 H1) "
         "dominates; acceptance runs at eps = 0.5 use tau_ref = 2e-4");
  report(std::move(c));
}

void supplementary_reference_independence() {
  Criterion c{"supplementary: Table 1 errors vs a 10x finer reference"};
  const ProblemSection ps = benchmark_section(0.5);
  const GridSpec grid = build_grid(-32.0, 32.0, 1024);
  const ObtainedReference base = obtain_reference(ps.problem, ps.a, ps.b, 2.0, cache_policy(2e-4));
  ReferencePolicy fine_policy = cache_policy(2e-5);
  const ObtainedReference fine = obtain_reference(ps.problem, ps.a, ps.b, 2.0, fine_policy);

  for (const int order : {4, 6}) {
    for (const double tau : {0.1, 0.05, 0.025, 0.0125}) {
      const SolverState end = integrate(ps.problem, grid, tau, 2.0, order);
      const double e_base = h1_error_vs_reference(grid, end, base.ref);
      const double e_fine = h1_error_vs_reference(grid, end, fine.ref);
      const double rel = std::abs(e_base - e_fine) / e_base;
      if (e_base > 1e-8) {
        c.require(rel < 0.05, "order " + std::to_string(order) + " tau=" + fmt(tau) + ": " +
                                  fmt(e_base) + " vs " + fmt(e_fine) + " differ by " +
                                  fmt(rel * 100.0) + "% < 5%");
      } else {
        // the finer reference sits at its own roundoff floor here; both
        // measurements must still land inside the criterion-1 envelope
        c.require(within_factor(e_base, 5.74e-9, 2.0) && e_fine < 2.0 * 5.74e-9 * 2.0,
                  "order 6 tail cell: " + fmt(e_base) + " / " + fmt(e_fine) +
                      " (10x-finer reference floor-limited; both near 5.74e-9)");
      }
    }
  }
  report(std::move(c));
}

void supplementary_table2() {
  Criterion c{"supplementary: Table 2 stability probe (eps = 0.5, tau = 0.1)"};
  StudyConfig st;
  st.kind = StudyConfig::Kind::Stability;
  st.methods = {MethodSpec::parse("ewi4"), MethodSpec::parse("ewi6")};
  st.T = 2.0;
  st.epsilon0 = 0.5;
  st.tau0 = 0.1;
  st.h0 = 1.0 / 8.0;
  st.h_levels = 3;
  st.energy_stride = 0;

  const StudyResult run = run_stability_study(st, benchmark_section(0.5), cache_policy(2e-4));
  for (int j = 0; j < 3; ++j) {
    c.require(within_factor(run.records[static_cast<size_t>(j)].h1_error, 4.55e-2, 2.0),
              "ewi4 h=1/" + std::to_string(8 << j) + ": " +
                  fmt(run.records[static_cast<size_t>(j)].h1_error) + " ~ 4.55e-2");
  }
  for (int j = 0; j < 2; ++j) {
    c.require(within_factor(run.records[static_cast<size_t>(3 + j)].h1_error, 4.50e-3, 2.0),
              "ewi6 h=1/" + std::to_string(8 << j) + ": " +
                  fmt(run.records[static_cast<size_t>(3 + j)].h1_error) + " ~ 4.50e-3");
  }
  const double jump = run.records[5].h1_error;
  c.require(jump < 1.0, "ewi6 h=1/32 stays bounded: " + fmt(jump));
  c.info("ewi6 h=1/32 error " + fmt(jump) +
         " reproduces the reported degradation (nominal 5.85e-2, unexplained)");
  report(std::move(c));
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--verbose" || arg == "-v") {
      g_verbose = true;
    } else if (arg == "--filter" && i + 1 < argc) {
      g_filter = argv[++i];
    }
  }

  const auto want = [&](const char* tag) {
    return g_filter.empty() || std::string(tag).find(g_filter) != std::string::npos;
  };

  if (want("criterion 6")) criterion_6_weight_oracle();
  if (want("criterion 8")) criterion_8_oracle_equivalence();
  if (want("criterion 4")) criterion_4_constant_exactness();
  if (want("criterion 5")) criterion_5_time_symmetry();
  if (want("criterion 1")) criterion_1_table1();
  if (want("criterion 2")) criterion_2_table3();
  if (want("criterion 7")) criterion_7_energy();
  if (want("criterion 3")) criterion_3_table4();
  if (want("supplementary")) {
    supplementary_reference_convergence();
    supplementary_reference_independence();
    supplementary_table2();
  }

  int failed = 0;
  for (const auto& c : g_results) {
    if (!c.pass) ++failed;
  }
  if (failed == 0) {
    std::printf("all %zu checks passed\n", g_results.size());
    return 0;
  }
  std::printf("%d of %zu checks FAILED\n", failed, g_results.size());
  return 1;
}

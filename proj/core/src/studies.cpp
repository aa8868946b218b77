#include "kgewi/studies.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "kgewi/ewi.hpp"
#include "kgewi/rk4.hpp"

namespace kgewi {

namespace {

struct Cell {
  MethodSpec method;
  double epsilon = 0.0;
  double tau = 0.0;
  double h = 0.0;
  int group = -1;     // rate ladder id; -1 = no ladder
  int position = 0;   // refinement index within the ladder
  bool want_trace = false;
};

struct CellOutcome {
  ErrorRecord record;
  EnergyTrace trace;
  std::string failure;  // non-instability error, fatal for the study
};

long step_count(double T, double tau) {
  return std::lround(T / tau);
}

CellOutcome run_cell(const KGEProblem& base, double a, double b, double T, const Cell& cell,
                     const ReferenceSolution* ref, int energy_stride, bool dealias) {
  CellOutcome out;
  out.record.epsilon = cell.epsilon;
  out.record.tau = cell.tau;
  out.record.h = cell.h;
  out.record.method = cell.method.family_name();
  out.record.order = cell.method.order;
  out.trace.method = cell.method;
  out.trace.tau = cell.tau;

  KGEProblem problem = base;
  problem.epsilon = cell.epsilon;
  const GridSpec grid = build_grid(a, b, grid_points_for(a, b, cell.h));
  const long steps = step_count(T, cell.tau);

  double e0 = 0.0;
  double max_rel = 0.0;
  long calls = 0;
  IntegrateOptions opts;
  opts.dealias = dealias;
  if (energy_stride > 0) {
    opts.observer = [&](const SolverState& s) {
      const long n = calls++;
      if (n % energy_stride != 0 && n != steps) return;
      const double e = energy(problem, grid, s);
      if (n == 0) e0 = e;
      const double rel = std::abs(e - e0) / std::max(std::abs(e0), 1e-300);
      max_rel = std::max(max_rel, rel);
      if (cell.want_trace) out.trace.points.push_back({s.t, e, rel});
    };
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    SolverState final;
    if (cell.method.family == MethodSpec::Family::Rk4) {
      final = integrate_rk4(problem, grid, cell.tau, T, opts);
    } else {
      final = integrate(problem, grid, cell.tau, T, cell.method.order, opts);
    }
    const auto t1 = std::chrono::steady_clock::now();
    out.record.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
    out.record.h1_error = ref ? h1_error_vs_reference(grid, final, *ref) : 0.0;
  } catch (const InstabilityError&) {
    out.record.unstable = true;
    out.record.h1_error = std::numeric_limits<double>::infinity();
  } catch (const std::exception& e) {
    out.failure = e.what();
  }
  out.record.max_energy_rel_error = max_rel;
  out.trace.max_rel_error = max_rel;
  return out;
}

void fill_rates(std::vector<ErrorRecord>& records, const std::vector<Cell>& cells) {
  std::map<int, std::map<int, size_t>> groups;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].group >= 0) groups[cells[i].group][cells[i].position] = i;
  }
  for (const auto& [g, members] : groups) {
    const ErrorRecord* prev = nullptr;
    for (const auto& [pos, idx] : members) {
      ErrorRecord& r = records[idx];
      if (prev != nullptr && std::isfinite(prev->h1_error) && std::isfinite(r.h1_error) &&
          prev->h1_error > 0.0 && r.h1_error > 0.0) {
        r.rate = std::log2(prev->h1_error / r.h1_error);
      }
      prev = &r;
    }
  }
}

StudyResult run_cells(const std::vector<Cell>& cells, const ProblemSection& ps, double T,
                      const ReferencePolicy& policy, int energy_stride, bool dealias,
                      int workers, bool with_reference) {
  // References first, serially: one per distinct epsilon, shared by cells.
  std::map<double, ReferenceSolution> refs;
  if (with_reference) {
    std::vector<double> epsilons;
    for (const auto& c : cells) {
      if (refs.find(c.epsilon) == refs.end()) {
        refs[c.epsilon] = ReferenceSolution{};
        epsilons.push_back(c.epsilon);
      }
    }
    if (policy.explicit_path && epsilons.size() > 1)
      throw ConfigError("[reference]: explicit path cannot serve multiple epsilon values");
    for (const double eps : epsilons) {
      KGEProblem problem = ps.problem;
      problem.epsilon = eps;
      refs[eps] = obtain_reference(problem, ps.a, ps.b, T, policy).ref;
    }
  }

  std::vector<CellOutcome> outcomes(cells.size());
  const int n_workers = std::min<int>(resolve_workers(workers), static_cast<int>(cells.size()));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const ReferenceSolution* ref =
          with_reference ? &refs.at(cells[i].epsilon) : nullptr;
      outcomes[i] = run_cell(ps.problem, ps.a, ps.b, T, cells[i], ref, energy_stride, dealias);
    }
  };
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_workers));
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  StudyResult result;
  result.records.reserve(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) {
    if (!outcomes[i].failure.empty())
      throw std::runtime_error("study cell failed: " + outcomes[i].failure);
    result.records.push_back(std::move(outcomes[i].record));
    if (cells[i].want_trace) result.traces.push_back(std::move(outcomes[i].trace));
  }
  fill_rates(result.records, cells);
  return result;
}

}  // namespace

StudyResult run_temporal_study(const StudyConfig& study, const ProblemSection& ps,
                               const ReferencePolicy& policy, int workers) {
  std::vector<Cell> cells;
  int group = 0;
  for (const auto& method : study.methods) {
    for (int i = 0; i < study.epsilon_levels; ++i) {
      const double eps = study.epsilon0 / std::pow(2.0, i);
      const double tau_row = study.tau0 / std::pow(study.epsilon_tau_coupling, i);
      for (int j = 0; j < study.tau_levels; ++j) {
        Cell c;
        c.method = method;
        c.epsilon = eps;
        c.tau = tau_row / std::pow(2.0, j);
        c.h = study.h;
        c.group = group;
        c.position = j;
        cells.push_back(c);
      }
      ++group;
    }
  }
  return run_cells(cells, ps, study.T, policy, study.energy_stride, study.dealias, workers, true);
}

StudyResult run_spatial_study(const StudyConfig& study, const ProblemSection& ps,
                              const ReferencePolicy& policy, int workers) {
  std::vector<Cell> cells;
  int group = 0;
  for (const auto& method : study.methods) {
    for (int i = 0; i < study.epsilon_levels; ++i) {
      const double eps = study.epsilon0 / std::pow(2.0, i);
      for (int j = 0; j < study.h_levels; ++j) {
        Cell c;
        c.method = method;
        c.epsilon = eps;
        c.tau = study.tau;
        c.h = study.h0 / std::pow(2.0, j);
        c.group = group;
        c.position = j;
        cells.push_back(c);
      }
      ++group;
    }
  }
  return run_cells(cells, ps, study.T, policy, study.energy_stride, study.dealias, workers, true);
}

StudyResult run_stability_study(const StudyConfig& study, const ProblemSection& ps,
                                const ReferencePolicy& policy, int workers) {
  std::vector<Cell> cells;
  for (const auto& method : study.methods) {
    for (int j = 0; j < study.h_levels; ++j) {
      Cell c;
      c.method = method;
      c.epsilon = study.epsilon0;
      c.tau = study.tau0;
      c.h = study.h0 / std::pow(2.0, j);
      cells.push_back(c);
    }
  }
  return run_cells(cells, ps, study.T, policy, study.energy_stride, study.dealias, workers, true);
}

StudyResult run_energy_trace(const StudyConfig& study, const ProblemSection& ps,
                             const ReferencePolicy& policy, int workers) {
  std::vector<Cell> cells;
  for (const auto& method : study.methods) {
    for (int j = 0; j < study.tau_levels; ++j) {
      Cell c;
      c.method = method;
      c.epsilon = study.epsilon0;
      c.tau = study.tau0 / std::pow(2.0, j);
      c.h = study.h;
      c.want_trace = true;
      cells.push_back(c);
    }
  }
  const int stride = study.energy_stride > 0 ? study.energy_stride : 1;
  return run_cells(cells, ps, study.T, policy, stride, study.dealias, workers, true);
}

StudyResult run_study(const StudyConfig& study, const ProblemSection& ps,
                      const ReferencePolicy& policy, int workers) {
  switch (study.kind) {
    case StudyConfig::Kind::Temporal: return run_temporal_study(study, ps, policy, workers);
    case StudyConfig::Kind::Spatial: return run_spatial_study(study, ps, policy, workers);
    case StudyConfig::Kind::Stability: return run_stability_study(study, ps, policy, workers);
    case StudyConfig::Kind::Energy: return run_energy_trace(study, ps, policy, workers);
  }
  throw std::logic_error("run_study: unreachable");
}

}  // namespace kgewi

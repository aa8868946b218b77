#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgewi/config.hpp"
#include "kgewi/reference.hpp"

namespace kgewi {

/// One table cell. h1_error is +inf when the integrator aborted (instability
/// marker); rate is log2(e(tau)/e(tau/2)) between adjacent entries of the
/// same ladder and absent on the first entry.
struct ErrorRecord {
  double epsilon = 0.0;
  double tau = 0.0;
  double h = 0.0;
  std::string method;  // "ewi" | "rk4"
  int order = 0;
  double h1_error = 0.0;
  std::optional<double> rate;
  double wall_time_s = 0.0;
  double max_energy_rel_error = 0.0;
  bool unstable = false;
};

struct TracePoint {
  double t = 0.0;
  double energy = 0.0;
  double rel_error = 0.0;
};

struct EnergyTrace {
  MethodSpec method;
  double tau = 0.0;
  std::vector<TracePoint> points;
  double max_rel_error = 0.0;
};

struct StudyResult {
  std::vector<ErrorRecord> records;
  std::vector<EnergyTrace> traces;  // energy studies only
};

/// Tau ladders (optionally coupled to an epsilon ladder) at fixed h.
StudyResult run_temporal_study(const StudyConfig& study, const ProblemSection& ps,
                               const ReferencePolicy& policy, int workers = 0);

/// h ladder at a fixed small tau.
StudyResult run_spatial_study(const StudyConfig& study, const ProblemSection& ps,
                              const ReferencePolicy& policy, int workers = 0);

/// h ladder at a fixed large tau (stability probe).
StudyResult run_stability_study(const StudyConfig& study, const ProblemSection& ps,
                                const ReferencePolicy& policy, int workers = 0);

/// Per-step energy traces across a tau ladder.
StudyResult run_energy_trace(const StudyConfig& study, const ProblemSection& ps,
                             const ReferencePolicy& policy, int workers = 0);

/// Dispatch on study.kind.
StudyResult run_study(const StudyConfig& study, const ProblemSection& ps,
                      const ReferencePolicy& policy, int workers = 0);

}  // namespace kgewi

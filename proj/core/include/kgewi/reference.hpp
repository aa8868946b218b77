#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "kgewi/config.hpp"
#include "kgewi/problem.hpp"

namespace kgewi {

/// A converged end-time solution used as the error yardstick. Stored as grid
/// values of u(., T) and du/dt(., T) at full double precision, generated by
/// the 6th-order scheme with a very small time step.
struct ReferenceSolution {
  std::string generator = "ewi6";
  double epsilon = 0.0;
  double a = 0.0;
  double b = 0.0;
  int M = 0;
  double T = 0.0;
  double tau_ref = 0.0;
  std::string problem_desc;
  uint64_t problem_hash = 0;
  RealField u;
  RealField udot;
};

uint64_t fnv1a64(std::string_view data);

/// Canonical description of (problem, interval); part of the cache key.
std::string problem_signature(const KGEProblem& problem, double a, double b);

/// Integrates with the 6th-order scheme at tau_ref on the given grid.
ReferenceSolution compute_reference(const KGEProblem& problem, const GridSpec& grid, double T,
                                    double tau_ref);

/// Packs an existing state's grid values in the reference file layout
/// (generator tags where the field came from, e.g. "ewi4" or "rk4").
ReferenceSolution make_state_snapshot(const KGEProblem& problem, const GridSpec& grid,
                                      const SolverState& state, double T, double tau,
                                      const std::string& generator);

/// Plain-text cache file: "key: value" header lines (with a content hash)
/// followed by one "index u udot" row per grid point, 17 significant digits.
/// Writing is create-then-atomic-rename, so concurrent writers are safe.
void save_reference(const ReferenceSolution& ref, const std::filesystem::path& path);
ReferenceSolution load_reference(const std::filesystem::path& path);

struct ObtainedReference {
  ReferenceSolution ref;
  bool cache_hit = false;
  std::filesystem::path path;
};

/// Cache lookup keyed by the problem hash; a corrupt or mismatched file is
/// regenerated with a warning on stderr.
ObtainedReference obtain_reference(const KGEProblem& problem, double a, double b, double T,
                                   const ReferencePolicy& policy);

/// H^1 norm of the spectral difference between the state and the reference.
/// When the grids differ, the coarser spectrum is zero-pad embedded onto the
/// finer grid (the embedding realizes the trigonometric interpolant exactly).
double h1_error_vs_reference(const GridSpec& grid, const SolverState& state,
                             const ReferenceSolution& ref);

}  // namespace kgewi

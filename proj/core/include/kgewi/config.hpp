#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgewi/problem.hpp"

namespace kgewi {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sectioned plain-text configuration:
///   [section]
///   key = value        # comment
/// Values are free text up to the first '#'; lists are comma- or
/// space-separated.
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::filesystem::path& path);
  static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string_or(const std::string& section, const std::string& key,
                            const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key, double fallback) const;
  int get_int(const std::string& section, const std::string& key) const;
  int get_int_or(const std::string& section, const std::string& key, int fallback) const;
  bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;
  std::vector<std::string> get_list(const std::string& section, const std::string& key) const;

  const std::map<std::string, std::map<std::string, std::string>>& sections() const {
    return data_;
  }
  const std::string& origin() const { return origin_; }

 private:
  std::map<std::string, std::map<std::string, std::string>> data_;
  std::string origin_;
};

struct MethodSpec {
  enum class Family { Ewi, Rk4 };
  Family family = Family::Ewi;
  int order = 4;  // 2N for the EWI family; RK4 is classical order 4

  std::string tag() const;          // "ewi2" | "ewi4" | "ewi6" | "rk4"
  std::string family_name() const;  // "ewi" | "rk4"
  static MethodSpec parse(const std::string& tag);
};

/// [problem]: epsilon, nonlinearity and initial-data presets, interval.
struct ProblemSection {
  KGEProblem problem;
  double a = -32.0;
  double b = 32.0;
};
ProblemSection load_problem(const ConfigFile& cfg);

/// [reference]: cache location and the reference discretization.
struct ReferencePolicy {
  std::filesystem::path cache_dir = "kgewi-ref-cache";
  std::optional<std::filesystem::path> explicit_path;
  double tau_ref = 1e-5;
  double h_ref = 1.0 / 16.0;
};
ReferencePolicy load_reference_policy(const ConfigFile& cfg);

/// [output]: csv/json summary paths, trace directory, optional state dump.
struct OutputPaths {
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> json;
  std::optional<std::filesystem::path> trace_dir;
  std::optional<std::filesystem::path> state;
};
OutputPaths load_output(const ConfigFile& cfg);

/// [run]: a single solve.
struct SolveConfig {
  MethodSpec method;
  double tau = 0.1;
  double T = 2.0;
  double h = 1.0 / 16.0;
  int energy_stride = 1;  // 0 disables energy tracking
  bool dealias = false;
  bool compare_reference = false;
};
SolveConfig load_solve(const ConfigFile& cfg);

/// [study]: ladder description for the study runners.
struct StudyConfig {
  enum class Kind { Temporal, Spatial, Stability, Energy };
  Kind kind = Kind::Temporal;
  std::vector<MethodSpec> methods;
  double T = 2.0;
  double epsilon0 = 0.5;
  int epsilon_levels = 1;       // epsilon = epsilon0 / 2^i
  double tau0 = 0.1;
  int tau_levels = 1;           // tau = tau0 / 2^j within a row
  double epsilon_tau_coupling = 1.0;  // row i starts at tau0 / coupling^i
  double h = 1.0 / 16.0;        // fixed h (temporal, energy)
  double h0 = 1.0;              // h ladder start (spatial, stability)
  int h_levels = 1;             // h = h0 / 2^i
  double tau = 1e-5;            // fixed tau (spatial, stability)
  int energy_stride = 1;
  bool dealias = false;
};
StudyConfig load_study(const ConfigFile& cfg);

/// Grid size for mesh width h on [a,b]; h must divide the interval evenly.
int grid_points_for(double a, double b, double h);

/// Worker count: explicit request > KGEWI_WORKERS env > hardware concurrency.
int resolve_workers(int requested);

}  // namespace kgewi

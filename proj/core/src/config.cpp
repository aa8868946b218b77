#include "kgewi/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <numbers>

namespace kgewi {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str(), path.string());
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
      cfg.data_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (section.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": key outside any [section]");
    cfg.data_[section][key] = value;
  }
  return cfg;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
  const auto s = data_.find(section);
  return s != data_.end() && s->second.find(key) != s->second.end();
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) const {
  const auto s = data_.find(section);
  if (s == data_.end())
    throw ConfigError(origin_ + ": missing section [" + section + "]");
  const auto k = s->second.find(key);
  if (k == s->second.end())
    throw ConfigError(origin_ + ": missing key '" + key + "' in section [" + section + "]");
  return k->second;
}

std::string ConfigFile::get_string_or(const std::string& section, const std::string& key,
                                      const std::string& fallback) const {
  return has(section, key) ? get_string(section, key) : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
  const std::string s = get_string(section, key);
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not a number: " + s);
  }
}

double ConfigFile::get_double_or(const std::string& section, const std::string& key,
                                 double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

int ConfigFile::get_int(const std::string& section, const std::string& key) const {
  const double v = get_double(section, key);
  const int i = static_cast<int>(std::lround(v));
  if (std::abs(v - i) > 1e-12)
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not an integer");
  return i;
}

int ConfigFile::get_int_or(const std::string& section, const std::string& key,
                           int fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

bool ConfigFile::get_bool_or(const std::string& section, const std::string& key,
                             bool fallback) const {
  if (!has(section, key)) return fallback;
  std::string s = get_string(section, key);
  std::transform(s.begin(), s.end(), s.begin(), ::tolower);
  if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
  if (s == "false" || s == "no" || s == "off" || s == "0") return false;
  throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not a boolean");
}

std::vector<std::string> ConfigFile::get_list(const std::string& section,
                                              const std::string& key) const {
  std::string s = get_string(section, key);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string item;
  while (in >> item) out.push_back(item);
  return out;
}

std::string MethodSpec::tag() const {
  if (family == Family::Rk4) return "rk4";
  return "ewi" + std::to_string(order);
}

std::string MethodSpec::family_name() const {
  return family == Family::Rk4 ? "rk4" : "ewi";
}

MethodSpec MethodSpec::parse(const std::string& tag) {
  if (tag == "rk4") return MethodSpec{Family::Rk4, 4};
  if (tag == "ewi2") return MethodSpec{Family::Ewi, 2};
  if (tag == "ewi4") return MethodSpec{Family::Ewi, 4};
  if (tag == "ewi6") return MethodSpec{Family::Ewi, 6};
  throw ConfigError("unknown method tag '" + tag + "' (expected ewi2|ewi4|ewi6|rk4)");
}

namespace {

struct Preset {
  std::function<double(double)> fn;
  std::string desc;
};

Preset load_preset(const ConfigFile& cfg, const std::string& which, double a, double b) {
  const std::string name = cfg.get_string_or("problem", which + "_preset", "zero");
  if (name == "zero") {
    return {[](double) { return 0.0; }, "zero"};
  }
  if (name == "gaussian") {
    const double amp = cfg.get_double_or("problem", which + "_amplitude", 1.0);
    const double width = cfg.get_double_or("problem", which + "_width", 1.0);
    const double center = cfg.get_double_or("problem", which + "_center", 0.0);
    if (!(width > 0.0)) throw ConfigError("gaussian preset: width must be positive");
    return {[amp, width, center](double x) {
              const double z = (x - center) / width;
              return amp * std::exp(-z * z);
            },
            "gaussian amplitude=" + format_double(amp) + " width=" + format_double(width) +
                " center=" + format_double(center)};
  }
  if (name == "cosine") {
    const double amp = cfg.get_double_or("problem", which + "_amplitude", 1.0);
    const int mode = cfg.get_int_or("problem", which + "_mode", 1);
    const double mu = 2.0 * std::numbers::pi * mode / (b - a);
    return {[amp, mu, a](double x) { return amp * std::cos(mu * (x - a)); },
            "cosine amplitude=" + format_double(amp) + " mode=" + std::to_string(mode)};
  }
  throw ConfigError("unknown initial-data preset '" + name + "' (gaussian|cosine|zero)");
}

}  // namespace

ProblemSection load_problem(const ConfigFile& cfg) {
  ProblemSection ps;
  ps.a = cfg.get_double_or("problem", "a", -32.0);
  ps.b = cfg.get_double_or("problem", "b", 32.0);
  if (!(ps.b > ps.a)) throw ConfigError("[problem]: requires b > a");

  ps.problem.epsilon = cfg.get_double_or("problem", "epsilon", 0.5);
  if (!(ps.problem.epsilon > 0.0) || ps.problem.epsilon > 1.0)
    throw ConfigError("[problem]: epsilon must be in (0, 1]");

  const std::string nl = cfg.get_string_or("problem", "nonlinearity", "cubic");
  if (nl == "cubic") {
    ps.problem.f = std::make_shared<CubicNonlinearity>(cfg.get_double_or("problem", "lambda", 1.0));
  } else if (nl == "constant") {
    ps.problem.f =
        std::make_shared<ConstantNonlinearity>(cfg.get_double_or("problem", "constant_value", 1.0));
  } else if (nl == "zero") {
    ps.problem.f = std::make_shared<ConstantNonlinearity>(0.0);
  } else {
    throw ConfigError("[problem]: unknown nonlinearity '" + nl + "' (cubic|constant|zero)");
  }

  Preset p1 = load_preset(cfg, "phi1", ps.a, ps.b);
  Preset p2 = load_preset(cfg, "phi2", ps.a, ps.b);
  ps.problem.phi1 = std::move(p1.fn);
  ps.problem.phi2 = std::move(p2.fn);
  ps.problem.phi1_desc = std::move(p1.desc);
  ps.problem.phi2_desc = std::move(p2.desc);
  return ps;
}

ReferencePolicy load_reference_policy(const ConfigFile& cfg) {
  ReferencePolicy rp;
  rp.cache_dir = cfg.get_string_or("reference", "cache_dir", rp.cache_dir.string());
  if (cfg.has("reference", "path")) rp.explicit_path = cfg.get_string("reference", "path");
  rp.tau_ref = cfg.get_double_or("reference", "tau_ref", rp.tau_ref);
  rp.h_ref = cfg.get_double_or("reference", "h_ref", rp.h_ref);
  if (!(rp.tau_ref > 0.0)) throw ConfigError("[reference]: tau_ref must be positive");
  if (!(rp.h_ref > 0.0)) throw ConfigError("[reference]: h_ref must be positive");
  return rp;
}

OutputPaths load_output(const ConfigFile& cfg) {
  OutputPaths op;
  if (cfg.has("output", "csv")) op.csv = cfg.get_string("output", "csv");
  if (cfg.has("output", "json")) op.json = cfg.get_string("output", "json");
  if (cfg.has("output", "trace_dir")) op.trace_dir = cfg.get_string("output", "trace_dir");
  if (cfg.has("output", "state")) op.state = cfg.get_string("output", "state");
  return op;
}

SolveConfig load_solve(const ConfigFile& cfg) {
  SolveConfig sc;
  sc.method = MethodSpec::parse(cfg.get_string_or("run", "method", "ewi4"));
  sc.tau = cfg.get_double("run", "tau");
  sc.T = cfg.get_double("run", "T");
  sc.h = cfg.get_double("run", "h");
  sc.energy_stride = cfg.get_int_or("run", "energy_stride", 1);
  sc.dealias = cfg.get_bool_or("run", "dealias", false);
  sc.compare_reference = cfg.get_bool_or("run", "compare_reference", false);
  if (!(sc.T > 0.0)) throw ConfigError("[run]: T must be positive");
  if (!(sc.tau > 0.0)) throw ConfigError("[run]: tau must be positive");
  if (!(sc.h > 0.0)) throw ConfigError("[run]: h must be positive");
  if (sc.energy_stride < 0) throw ConfigError("[run]: energy_stride must be >= 0");
  return sc;
}

StudyConfig load_study(const ConfigFile& cfg) {
  StudyConfig st;
  const std::string kind = cfg.get_string("study", "kind");
  if (kind == "temporal") {
    st.kind = StudyConfig::Kind::Temporal;
  } else if (kind == "spatial") {
    st.kind = StudyConfig::Kind::Spatial;
  } else if (kind == "stability") {
    st.kind = StudyConfig::Kind::Stability;
  } else if (kind == "energy") {
    st.kind = StudyConfig::Kind::Energy;
  } else {
    throw ConfigError("[study]: unknown kind '" + kind + "'");
  }

  for (const auto& tag : cfg.get_list("study", "methods")) {
    st.methods.push_back(MethodSpec::parse(tag));
  }
  if (st.methods.empty()) throw ConfigError("[study]: methods list is empty");

  st.T = cfg.get_double_or("study", "T", 2.0);
  if (!(st.T > 0.0)) throw ConfigError("[study]: T must be positive");
  st.epsilon0 = cfg.get_double_or("study", "epsilon0", cfg.get_double_or("study", "epsilon", 0.5));
  st.epsilon_levels = cfg.get_int_or("study", "epsilon_levels", 1);
  st.tau0 = cfg.get_double_or("study", "tau0", 0.1);
  st.tau_levels = cfg.get_int_or("study", "tau_levels", 1);
  st.epsilon_tau_coupling = cfg.get_double_or("study", "epsilon_tau_coupling", 1.0);
  st.h = cfg.get_double_or("study", "h", 1.0 / 16.0);
  st.h0 = cfg.get_double_or("study", "h0", 1.0);
  st.h_levels = cfg.get_int_or("study", "h_levels", 1);
  st.tau = cfg.get_double_or("study", "tau", 1e-5);
  st.energy_stride = cfg.get_int_or("study", "energy_stride", 1);
  st.dealias = cfg.get_bool_or("study", "dealias", false);

  if (st.epsilon_levels < 1 || st.tau_levels < 1 || st.h_levels < 1)
    throw ConfigError("[study]: ladder levels must be >= 1");
  if (!(st.epsilon0 > 0.0)) throw ConfigError("[study]: epsilon0 must be positive");
  if (!(st.tau0 > 0.0) || !(st.tau > 0.0)) throw ConfigError("[study]: tau must be positive");
  if (!(st.h > 0.0) || !(st.h0 > 0.0)) throw ConfigError("[study]: h must be positive");
  if (st.energy_stride < 0) throw ConfigError("[study]: energy_stride must be >= 0");
  return st;
}

int grid_points_for(double a, double b, double h) {
  const double ratio = (b - a) / h;
  const int m = static_cast<int>(std::lround(ratio));
  if (m < 4 || std::abs(ratio - m) > 1e-9 * ratio)
    throw ConfigError("mesh size h does not divide the interval into an even count >= 4");
  if (m % 2 != 0) throw ConfigError("mesh size h gives an odd number of grid points");
  return m;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KGEWI_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 16u));
}

}  // namespace kgewi

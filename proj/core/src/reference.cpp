#include "kgewi/reference.hpp"

#include <unistd.h>

#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kgewi/ewi.hpp"

namespace kgewi {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string data_block(const ReferenceSolution& ref) {
  std::string out;
  out.reserve(static_cast<size_t>(ref.M) * 48);
  char buf[96];
  for (int j = 0; j < ref.M; ++j) {
    std::snprintf(buf, sizeof(buf), "%d %.17g %.17g\n", j, ref.u[j], ref.udot[j]);
    out += buf;
  }
  return out;
}

std::string header_key(const std::string& line) {
  const auto colon = line.find(':');
  return colon == std::string::npos ? "" : line.substr(0, colon);
}

std::string header_value(const std::string& line) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) return "";
  auto v = line.substr(colon + 1);
  const auto first = v.find_first_not_of(' ');
  return first == std::string::npos ? "" : v.substr(first);
}

}  // namespace

uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string problem_signature(const KGEProblem& problem, double a, double b) {
  std::string s = "epsilon=" + format_double(problem.epsilon);
  s += " a=" + format_double(a);
  s += " b=" + format_double(b);
  s += " f={" + (problem.f ? problem.f->describe() : "none") + "}";
  s += " phi1={" + problem.phi1_desc + "}";
  s += " phi2={" + problem.phi2_desc + "}";
  return s;
}

ReferenceSolution make_state_snapshot(const KGEProblem& problem, const GridSpec& grid,
                                      const SolverState& state, double T, double tau,
                                      const std::string& generator) {
  ReferenceSolution ref;
  ref.generator = generator;
  ref.epsilon = problem.epsilon;
  ref.a = grid.a;
  ref.b = grid.b;
  ref.M = grid.M;
  ref.T = T;
  ref.tau_ref = tau;
  ref.problem_desc = problem_signature(problem, grid.a, grid.b);
  ref.problem_hash = fnv1a64(ref.problem_desc + " M=" + std::to_string(grid.M) +
                             " T=" + format_double(T) + " tau_ref=" + format_double(tau) +
                             " generator=" + generator);
  ref.u = inverse_dft(grid, state.u);
  ref.udot = inverse_dft(grid, state.udot);
  return ref;
}

ReferenceSolution compute_reference(const KGEProblem& problem, const GridSpec& grid, double T,
                                    double tau_ref) {
  const SolverState final = integrate(problem, grid, tau_ref, T, 6);
  return make_state_snapshot(problem, grid, final, T, tau_ref, "ewi6");
}

void save_reference(const ReferenceSolution& ref, const std::filesystem::path& path) {
  const std::string block = data_block(ref);
  char hashbuf[24];
  std::snprintf(hashbuf, sizeof(hashbuf), "%016" PRIx64, fnv1a64(block));
  char phashbuf[24];
  std::snprintf(phashbuf, sizeof(phashbuf), "%016" PRIx64, ref.problem_hash);

  std::ostringstream out;
  out << "format: kgewi-reference-1\n";
  out << "generator: " << ref.generator << "\n";
  out << "epsilon: " << format_double(ref.epsilon) << "\n";
  out << "a: " << format_double(ref.a) << "\n";
  out << "b: " << format_double(ref.b) << "\n";
  out << "M: " << ref.M << "\n";
  out << "T: " << format_double(ref.T) << "\n";
  out << "tau_ref: " << format_double(ref.tau_ref) << "\n";
  out << "problem: " << ref.problem_desc << "\n";
  out << "problem_hash: " << phashbuf << "\n";
  out << "content_hash: " << hashbuf << "\n";
  out << "data: " << ref.M << "\n";
  out << block;

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  static std::atomic<unsigned> counter{0};
  const std::filesystem::path tmp = path.string() + ".tmp." +
                                    std::to_string(static_cast<long>(::getpid())) + "." +
                                    std::to_string(counter.fetch_add(1));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write reference file: " + tmp.string());
    f << out.str();
  }
  std::filesystem::rename(tmp, path);
}

ReferenceSolution load_reference(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open reference file: " + path.string());

  ReferenceSolution ref;
  std::string line;
  std::string stored_content_hash;
  long rows = -1;
  while (std::getline(in, line)) {
    const std::string key = header_key(line);
    const std::string value = header_value(line);
    if (key == "format") {
      if (value != "kgewi-reference-1")
        throw std::runtime_error("unknown reference format in " + path.string());
    } else if (key == "generator") {
      ref.generator = value;
    } else if (key == "epsilon") {
      ref.epsilon = std::stod(value);
    } else if (key == "a") {
      ref.a = std::stod(value);
    } else if (key == "b") {
      ref.b = std::stod(value);
    } else if (key == "M") {
      ref.M = std::stoi(value);
    } else if (key == "T") {
      ref.T = std::stod(value);
    } else if (key == "tau_ref") {
      ref.tau_ref = std::stod(value);
    } else if (key == "problem") {
      ref.problem_desc = value;
    } else if (key == "problem_hash") {
      ref.problem_hash = std::stoull(value, nullptr, 16);
    } else if (key == "content_hash") {
      stored_content_hash = value;
    } else if (key == "data") {
      rows = std::stol(value);
      break;
    } else {
      throw std::runtime_error("unexpected header line in " + path.string() + ": " + line);
    }
  }
  if (rows < 0) throw std::runtime_error("reference file has no data section: " + path.string());
  if (rows != ref.M) throw std::runtime_error("reference row count != M in " + path.string());

  ref.u = RealField(ref.M);
  ref.udot = RealField(ref.M);
  std::string block;
  block.reserve(static_cast<size_t>(rows) * 48);
  for (long j = 0; j < rows; ++j) {
    if (!std::getline(in, line))
      throw std::runtime_error("reference file truncated: " + path.string());
    block += line;
    block += '\n';
    int idx = 0;
    double uu = 0.0, vv = 0.0;
    if (std::sscanf(line.c_str(), "%d %lg %lg", &idx, &uu, &vv) != 3 || idx != j)
      throw std::runtime_error("malformed reference row in " + path.string());
    ref.u[static_cast<int>(j)] = uu;
    ref.udot[static_cast<int>(j)] = vv;
  }

  char hashbuf[24];
  std::snprintf(hashbuf, sizeof(hashbuf), "%016" PRIx64, fnv1a64(block));
  if (stored_content_hash != hashbuf)
    throw std::runtime_error("reference content hash mismatch in " + path.string());
  return ref;
}

ObtainedReference obtain_reference(const KGEProblem& problem, double a, double b, double T,
                                   const ReferencePolicy& policy) {
  const int M = grid_points_for(a, b, policy.h_ref);
  const GridSpec grid = build_grid(a, b, M);

  const std::string signature = problem_signature(problem, a, b);
  const uint64_t expected_hash =
      fnv1a64(signature + " M=" + std::to_string(M) + " T=" + format_double(T) +
              " tau_ref=" + format_double(policy.tau_ref) + " generator=ewi6");

  std::filesystem::path path;
  if (policy.explicit_path) {
    path = *policy.explicit_path;
  } else {
    char hashbuf[24];
    std::snprintf(hashbuf, sizeof(hashbuf), "%016" PRIx64, expected_hash);
    path = policy.cache_dir / (std::string("ref-") + hashbuf + ".txt");
  }

  if (std::filesystem::exists(path)) {
    try {
      ReferenceSolution ref = load_reference(path);
      if (ref.problem_hash != expected_hash)
        throw std::runtime_error("cached reference was built for a different problem");
      return {std::move(ref), true, path};
    } catch (const std::exception& e) {
      std::cerr << "warning: regenerating reference (" << e.what() << ")\n";
    }
  }

  ReferenceSolution ref = compute_reference(problem, grid, T, policy.tau_ref);
  save_reference(ref, path);
  return {std::move(ref), false, path};
}

double h1_error_vs_reference(const GridSpec& grid, const SolverState& state,
                             const ReferenceSolution& ref) {
  if (grid.a != ref.a || grid.b != ref.b)
    throw std::invalid_argument("h1_error_vs_reference: grids cover different intervals");
  const GridSpec ref_grid = build_grid(ref.a, ref.b, ref.M);
  const SpectralField ref_hat = forward_dft(ref_grid, ref.u);

  const GridSpec& fine = grid.M >= ref_grid.M ? grid : ref_grid;
  SpectralField u_fine =
      grid.M >= ref_grid.M ? state.u : embed_spectrum(grid, state.u, ref_grid);
  const SpectralField r_fine =
      ref_grid.M >= grid.M ? ref_hat : embed_spectrum(ref_grid, ref_hat, grid);

  for (int k = 0; k < fine.M; ++k) u_fine[k] -= r_fine[k];
  return h1_norm(fine, u_fine);
}

}  // namespace kgewi

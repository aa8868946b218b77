#include "kgewi/problem.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace kgewi {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

double CubicNonlinearity::evaluate(int k, double u) const {
  switch (k) {
    case 0: return lambda_ * u * u * u;
    case 1: return 3.0 * lambda_ * u * u;
    case 2: return 6.0 * lambda_ * u;
    case 3: return 6.0 * lambda_;
    case 4: return 0.0;
    default: throw std::invalid_argument("CubicNonlinearity: derivative order out of range");
  }
}

void CubicNonlinearity::evaluate_into(int k, std::span<const double> u,
                                      std::span<double> out) const {
  const double lam = lambda_;
  switch (k) {
    case 0:
      for (size_t j = 0; j < u.size(); ++j) out[j] = lam * u[j] * u[j] * u[j];
      return;
    case 1:
      for (size_t j = 0; j < u.size(); ++j) out[j] = 3.0 * lam * u[j] * u[j];
      return;
    case 2:
      for (size_t j = 0; j < u.size(); ++j) out[j] = 6.0 * lam * u[j];
      return;
    case 3:
      for (size_t j = 0; j < u.size(); ++j) out[j] = 6.0 * lam;
      return;
    case 4:
      for (size_t j = 0; j < u.size(); ++j) out[j] = 0.0;
      return;
    default:
      throw std::invalid_argument("CubicNonlinearity: derivative order out of range");
  }
}

std::string CubicNonlinearity::describe() const {
  return "cubic lambda=" + format_double(lambda_);
}

void ConstantNonlinearity::evaluate_into(int k, std::span<const double> u,
                                         std::span<double> out) const {
  const double v = k == 0 ? value_ : 0.0;
  for (size_t j = 0; j < u.size(); ++j) out[j] = v;
}

std::string ConstantNonlinearity::describe() const {
  return "constant value=" + format_double(value_);
}

SolverState initial_state(const KGEProblem& problem, const GridSpec& grid) {
  RealField v1(grid.M), v2(grid.M);
  for (int j = 0; j < grid.M; ++j) {
    const double x = grid.node(j);
    v1[j] = problem.phi1 ? problem.phi1(x) : 0.0;
    v2[j] = problem.phi2 ? problem.phi2(x) : 0.0;
  }
  SolverState s;
  s.u = forward_dft(grid, v1);
  s.udot = forward_dft(grid, v2);
  const double scale = 1.0 / (problem.epsilon * problem.epsilon);
  for (auto& z : s.udot.coeffs) z *= scale;
  s.t = 0.0;
  return s;
}

double energy(const KGEProblem& problem, const GridSpec& grid, const SolverState& state) {
  const double eps2 = problem.epsilon * problem.epsilon;
  const RealField u = inverse_dft(grid, state.u);
  const RealField udot = inverse_dft(grid, state.udot);
  const RealField ux = inverse_dft(grid, spectral_derivative(grid, state.u, 1));
  double sum = 0.0;
  for (int j = 0; j < grid.M; ++j) {
    sum += eps2 * udot[j] * udot[j] + ux[j] * ux[j] + u[j] * u[j] / eps2 +
           problem.f->antiderivative(u[j]);
  }
  return grid.h * sum;
}

RealField nonlinearity_field(const KGEProblem& problem, const GridSpec& grid,
                             const RealField& u_values, int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("nonlinearity_field: k must be in 0..4");
  if (u_values.size() != grid.M)
    throw std::invalid_argument("nonlinearity_field: field length != M");
  RealField out(grid.M);
  problem.f->evaluate_into(k, u_values.values, out.values);
  return out;
}

}  // namespace kgewi

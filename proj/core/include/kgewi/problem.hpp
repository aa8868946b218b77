#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>

#include "kgewi/grid.hpp"

namespace kgewi {

/// Pointwise nonlinearity f(u) with derivatives f^(k) through k = 4 and the
/// antiderivative F(u) = 2 * integral_0^u f.
class Nonlinearity {
 public:
  virtual ~Nonlinearity() = default;

  /// f^(k)(u), k in 0..4.
  virtual double evaluate(int k, double u) const = 0;
  virtual double antiderivative(double u) const = 0;

  /// Canonical one-line description; feeds problem hashing and cache files.
  virtual std::string describe() const = 0;

  virtual void evaluate_into(int k, std::span<const double> u, std::span<double> out) const {
    for (size_t j = 0; j < u.size(); ++j) out[j] = evaluate(k, u[j]);
  }
};

/// f(u) = lambda u^3, F(u) = lambda u^4 / 2.
class CubicNonlinearity final : public Nonlinearity {
 public:
  explicit CubicNonlinearity(double lambda) : lambda_(lambda) {}

  double lambda() const { return lambda_; }
  double evaluate(int k, double u) const override;
  double antiderivative(double u) const override { return 0.5 * lambda_ * u * u * u * u; }
  std::string describe() const override;
  void evaluate_into(int k, std::span<const double> u, std::span<double> out) const override;

 private:
  double lambda_;
};

/// f(u) = K; the EWI schemes integrate this forcing exactly.
class ConstantNonlinearity final : public Nonlinearity {
 public:
  explicit ConstantNonlinearity(double value) : value_(value) {}

  double value() const { return value_; }
  double evaluate(int k, double) const override { return k == 0 ? value_ : 0.0; }
  double antiderivative(double u) const override { return 2.0 * value_ * u; }
  std::string describe() const override;
  void evaluate_into(int k, std::span<const double> u, std::span<double> out) const override;

 private:
  double value_;
};

/// Problem data. phi2 is stored unscaled; the 1/eps^2 factor on the initial
/// velocity enters in initial_state only.
struct KGEProblem {
  double epsilon = 1.0;
  std::shared_ptr<const Nonlinearity> f;
  std::function<double(double)> phi1;
  std::function<double(double)> phi2;
  std::string phi1_desc = "custom";
  std::string phi2_desc = "custom";
};

/// One time level: Fourier coefficients of u and of du/dt, plus the time.
struct SolverState {
  SpectralField u;
  SpectralField udot;
  double t = 0.0;
};

/// u^0 = dft(phi1 samples), udot^0 = dft(phi2 samples)/eps^2, t = 0.
SolverState initial_state(const KGEProblem& problem, const GridSpec& grid);

/// Discrete energy
///   h sum_j [ eps^2 udot_j^2 + (d/dx I_M u)(x_j)^2 + u_j^2/eps^2 + F(u_j) ],
/// the periodic rectangle rule applied to the conserved functional.
double energy(const KGEProblem& problem, const GridSpec& grid, const SolverState& state);

/// Elementwise f^(k)(u_j), k in 0..4.
RealField nonlinearity_field(const KGEProblem& problem, const GridSpec& grid,
                             const RealField& u_values, int k);

}  // namespace kgewi

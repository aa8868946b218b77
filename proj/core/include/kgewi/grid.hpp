#pragma once

#include <complex>
#include <vector>

namespace kgewi {

/// Uniform periodic grid on [a,b] with M intervals and Fourier modes
/// mu_l = 2*pi*l/(b-a), l = -M/2 .. M/2-1.
struct GridSpec {
  double a = 0.0;
  double b = 0.0;
  int M = 0;
  double h = 0.0;

  double length() const { return b - a; }
  double node(int j) const { return a + j * h; }

  /// Signed mode number for storage index k (FFT layout: 0..M/2-1, then -M/2..-1).
  int mode_of_index(int k) const { return k < M / 2 ? k : k - M; }
  /// Wave number mu_l for signed l.
  double mode(int l) const;
  /// Wave number for storage index k.
  double mode_by_index(int k) const { return mode(mode_of_index(k)); }
};

/// Grid samples v_0..v_{M-1}; v_M = v_0 is implied by periodicity.
struct RealField {
  std::vector<double> values;

  RealField() = default;
  explicit RealField(int m) : values(static_cast<size_t>(m), 0.0) {}

  int size() const { return static_cast<int>(values.size()); }
  double& operator[](int j) { return values[static_cast<size_t>(j)]; }
  double operator[](int j) const { return values[static_cast<size_t>(j)]; }
};

/// Discrete Fourier coefficients in FFT storage order. Index k holds mode
/// l = k for k < M/2 and l = k - M otherwise (Nyquist l = -M/2 at k = M/2).
struct SpectralField {
  std::vector<std::complex<double>> coeffs;

  SpectralField() = default;
  explicit SpectralField(int m) : coeffs(static_cast<size_t>(m)) {}

  int size() const { return static_cast<int>(coeffs.size()); }
  std::complex<double>& operator[](int k) { return coeffs[static_cast<size_t>(k)]; }
  const std::complex<double>& operator[](int k) const { return coeffs[static_cast<size_t>(k)]; }

  /// Access by signed mode number l in [-M/2, M/2-1].
  std::complex<double>& mode(int l) {
    return coeffs[static_cast<size_t>(l >= 0 ? l : l + size())];
  }
  const std::complex<double>& mode(int l) const {
    return coeffs[static_cast<size_t>(l >= 0 ? l : l + size())];
  }
};

/// Builds the grid; rejects b <= a and odd or too-small M.
GridSpec build_grid(double a, double b, int M);

/// Discrete Fourier transform, v_l = (1/M) sum_j v_j exp(-i mu_l (x_j - a)).
/// O(M log M) via FFT.
SpectralField forward_dft(const GridSpec& grid, const RealField& v);

/// Trigonometric interpolation back to grid values (inverse of forward_dft).
RealField inverse_dft(const GridSpec& grid, const SpectralField& c);

/// Inverse transform keeping imaginary parts (diagnostics and tests).
std::vector<std::complex<double>> inverse_dft_complex(const GridSpec& grid,
                                                      const SpectralField& c);

/// Multiplies mode l by (i mu_l)^order, order in {1,2}. The Nyquist mode is
/// zeroed for order 1 and kept with factor -mu^2 for order 2, so derivatives
/// of real fields stay real.
SpectralField spectral_derivative(const GridSpec& grid, const SpectralField& c, int order);

/// Discrete H^1 norm of the interpolant: sqrt((b-a) sum_l (1+mu_l^2) |c_l|^2).
double h1_norm(const GridSpec& grid, const SpectralField& c);

/// sqrt((b-a) sum_l |c_l|^2); equals the L^2 norm of the interpolant.
double l2_norm(const GridSpec& grid, const SpectralField& c);

/// Zero-pads a coarse spectrum onto a finer grid over the same interval.
/// The coarse Nyquist coefficient is split evenly between modes +-M_c/2,
/// which reproduces the real trigonometric interpolant exactly.
SpectralField embed_spectrum(const GridSpec& coarse, const SpectralField& c,
                             const GridSpec& fine);

/// Two-thirds rule: zeroes modes with |l| > M/3 in place.
void apply_two_thirds_dealias(const GridSpec& grid, SpectralField& c);

/// max_l |c_l - conj(c_{-l})| / max_l |c_l|; zero for perfectly real fields.
double conjugate_symmetry_defect(const SpectralField& c);

}  // namespace kgewi

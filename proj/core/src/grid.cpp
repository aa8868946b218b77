#include "kgewi/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"

namespace kgewi {

double GridSpec::mode(int l) const {
  return 2.0 * std::numbers::pi * static_cast<double>(l) / (b - a);
}

GridSpec build_grid(double a, double b, int M) {
  if (!(b > a)) throw std::invalid_argument("build_grid: requires b > a");
  if (M < 4) throw std::invalid_argument("build_grid: requires M >= 4");
  if (M % 2 != 0) throw std::invalid_argument("build_grid: requires even M");
  GridSpec g;
  g.a = a;
  g.b = b;
  g.M = M;
  g.h = (b - a) / static_cast<double>(M);
  return g;
}

SpectralField forward_dft(const GridSpec& grid, const RealField& v) {
  if (v.size() != grid.M) throw std::invalid_argument("forward_dft: field length != M");
  const int m = grid.M;
  std::vector<std::complex<double>> in(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) in[static_cast<size_t>(j)] = v[j];
  SpectralField c(m);
  detail::dft_forward(m, in.data(), c.coeffs.data());
  const double scale = 1.0 / static_cast<double>(m);
  for (auto& z : c.coeffs) z *= scale;
  return c;
}

std::vector<std::complex<double>> inverse_dft_complex(const GridSpec& grid,
                                                      const SpectralField& c) {
  if (c.size() != grid.M) throw std::invalid_argument("inverse_dft: field length != M");
  std::vector<std::complex<double>> out(static_cast<size_t>(grid.M));
  detail::dft_backward(grid.M, c.coeffs.data(), out.data());
  return out;
}

RealField inverse_dft(const GridSpec& grid, const SpectralField& c) {
  auto z = inverse_dft_complex(grid, c);
  RealField v(grid.M);
  for (int j = 0; j < grid.M; ++j) v[j] = z[static_cast<size_t>(j)].real();
  return v;
}

SpectralField spectral_derivative(const GridSpec& grid, const SpectralField& c, int order) {
  if (c.size() != grid.M) throw std::invalid_argument("spectral_derivative: field length != M");
  if (order != 1 && order != 2) throw std::invalid_argument("spectral_derivative: order must be 1 or 2");
  SpectralField out(grid.M);
  if (order == 1) {
    for (int k = 0; k < grid.M; ++k) {
      const double mu = grid.mode_by_index(k);
      out[k] = std::complex<double>(0.0, mu) * c[k];
    }
    out[grid.M / 2] = 0.0;  // odd-order derivative: drop the asymmetric Nyquist mode
  } else {
    for (int k = 0; k < grid.M; ++k) {
      const double mu = grid.mode_by_index(k);
      out[k] = -(mu * mu) * c[k];
    }
  }
  return out;
}

double h1_norm(const GridSpec& grid, const SpectralField& c) {
  if (c.size() != grid.M) throw std::invalid_argument("h1_norm: field length != M");
  double sum = 0.0;
  for (int k = 0; k < grid.M; ++k) {
    const double mu = grid.mode_by_index(k);
    sum += (1.0 + mu * mu) * std::norm(c[k]);
  }
  return std::sqrt(grid.length() * sum);
}

double l2_norm(const GridSpec& grid, const SpectralField& c) {
  if (c.size() != grid.M) throw std::invalid_argument("l2_norm: field length != M");
  double sum = 0.0;
  for (int k = 0; k < grid.M; ++k) sum += std::norm(c[k]);
  return std::sqrt(grid.length() * sum);
}

SpectralField embed_spectrum(const GridSpec& coarse, const SpectralField& c,
                             const GridSpec& fine) {
  if (c.size() != coarse.M) throw std::invalid_argument("embed_spectrum: field length != M");
  if (coarse.a != fine.a || coarse.b != fine.b)
    throw std::invalid_argument("embed_spectrum: grids cover different intervals");
  if (fine.M < coarse.M)
    throw std::invalid_argument("embed_spectrum: target grid is coarser than source");
  SpectralField out(fine.M);
  if (fine.M == coarse.M) {
    out = c;
    return out;
  }
  for (int l = -coarse.M / 2 + 1; l < coarse.M / 2; ++l) out.mode(l) = c.mode(l);
  const std::complex<double> nyq = c.mode(-coarse.M / 2);
  out.mode(-coarse.M / 2) = 0.5 * nyq;
  out.mode(coarse.M / 2) = 0.5 * nyq;
  return out;
}

void apply_two_thirds_dealias(const GridSpec& grid, SpectralField& c) {
  if (c.size() != grid.M) throw std::invalid_argument("dealias: field length != M");
  const int cutoff = grid.M / 3;
  for (int k = 0; k < grid.M; ++k) {
    if (std::abs(grid.mode_of_index(k)) > cutoff) c[k] = 0.0;
  }
}

double conjugate_symmetry_defect(const SpectralField& c) {
  const int m = c.size();
  double scale = 0.0;
  for (int k = 0; k < m; ++k) scale = std::max(scale, std::abs(c[k]));
  if (scale == 0.0) return 0.0;
  double worst = std::abs(c.mode(0).imag());
  worst = std::max(worst, std::abs(c.mode(-m / 2).imag()));
  for (int l = 1; l < m / 2; ++l) {
    worst = std::max(worst, std::abs(c.mode(l) - std::conj(c.mode(-l))));
  }
  return worst / scale;
}

}  // namespace kgewi

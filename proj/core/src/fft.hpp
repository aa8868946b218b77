#pragma once

#include <complex>

namespace kgewi::detail {

// Unscaled complex DFTs, exponent sign -1 (forward) / +1 (backward).
// Plans are cached per thread and per size; FFTW planner calls are
// serialized internally. FFTW_ESTIMATE keeps plans deterministic.
void dft_forward(int m, const std::complex<double>* in, std::complex<double>* out);
void dft_backward(int m, const std::complex<double>* in, std::complex<double>* out);

}  // namespace kgewi::detail

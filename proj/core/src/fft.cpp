#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace kgewi::detail {

namespace {

// The FFTW planner is not thread-safe; leaked so it outlives thread_local
// caches torn down at thread exit.
std::mutex& planner_mutex() {
  static std::mutex* m = new std::mutex;
  return *m;
}

struct PlanSet {
  int m = 0;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit PlanSet(int size) : m(size) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    in = fftw_alloc_complex(static_cast<size_t>(m));
    out = fftw_alloc_complex(static_cast<size_t>(m));
    fwd = fftw_plan_dft_1d(m, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(m, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  ~PlanSet() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(in);
    fftw_free(out);
  }

  PlanSet(const PlanSet&) = delete;
  PlanSet& operator=(const PlanSet&) = delete;
};

PlanSet& plans_for(int m) {
  thread_local std::map<int, std::unique_ptr<PlanSet>> cache;
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<PlanSet>(m);
  return *slot;
}

void execute(int m, const std::complex<double>* in, std::complex<double>* out, bool forward) {
  PlanSet& p = plans_for(m);
  // std::complex<double> is layout-compatible with fftw_complex (double[2]).
  std::memcpy(p.in, reinterpret_cast<const double*>(in),
              sizeof(fftw_complex) * static_cast<size_t>(m));
  fftw_execute(forward ? p.fwd : p.bwd);
  std::memcpy(reinterpret_cast<double*>(out), p.out,
              sizeof(fftw_complex) * static_cast<size_t>(m));
}

}  // namespace

void dft_forward(int m, const std::complex<double>* in, std::complex<double>* out) {
  execute(m, in, out, true);
}

void dft_backward(int m, const std::complex<double>* in, std::complex<double>* out) {
  execute(m, in, out, false);
}

}  // namespace kgewi::detail

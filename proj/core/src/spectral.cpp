#include "kinred/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace kinred::spectral {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

// Plans are created once per length with FFTW_UNALIGNED so they can execute
// on any caller buffer via the new-array interface.
PlanPair& plans_for(int n) {
  static std::map<int, PlanPair> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(n));
  PlanPair p;
  p.forward = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.backward = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  if (!p.forward || !p.backward) throw std::runtime_error("fftw plan failed");
  return cache.emplace(n, p).first->second;
}

}  // namespace

void fft(std::complex<double>* data, int n, int sign) {
  if (n <= 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft length must be a power of two");
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    PlanPair& p = plans_for(n);
    plan = (sign < 0) ? p.forward : p.backward;
  }
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, raw, raw);
  if (sign > 0) {
    const double inv = 1.0 / n;
    for (int i = 0; i < n; ++i) data[i] *= inv;
  }
}

double wavenumber(int k, int n, double length) {
  if (k == n / 2) return 0.0;
  const int kk = (k <= n / 2) ? k : k - n;
  return 2.0 * M_PI * kk / length;
}

}  // namespace kinred::spectral

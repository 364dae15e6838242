#include "ldm/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

#include "ldm/error.hpp"

namespace ldm {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft3d::Fft3d(int n) : n_(n) {
  // FFTW's planner is not thread-safe; callers hold planner_mutex().
  const std::size_t size = std::size_t(n) * n * n;
  fftw_complex* scratch = fftw_alloc_complex(size);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  forward_plan_ = fftw_plan_dft_3d(n, n, n, scratch, scratch, FFTW_FORWARD, flags);
  backward_plan_ = fftw_plan_dft_3d(n, n, n, scratch, scratch, FFTW_BACKWARD, flags);
  fftw_free(scratch);
  if (forward_plan_ == nullptr || backward_plan_ == nullptr) {
    throw Error("FFTW failed to create a plan for n=" + std::to_string(n));
  }
}

Fft3d::~Fft3d() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

const Fft3d& Fft3d::get(int n) {
  std::lock_guard lock(planner_mutex());
  static std::map<int, std::unique_ptr<Fft3d>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<Fft3d>(new Fft3d(n))).first;
  return *it->second;
}

void Fft3d::forward(std::span<std::complex<double>> data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), p, p);
}

void Fft3d::backward(std::span<std::complex<double>> data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(backward_plan_), p, p);
}

}  // namespace ldm

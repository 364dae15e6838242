#pragma once

#include <complex>
#include <memory>
#include <span>

namespace ldm {

/// In-place 3-D complex transforms of size n^3 backed by FFTW.
///
/// Plans are created once per n with FFTW_ESTIMATE (deterministic plans, so
/// runs are bit-reproducible) and shared process-wide; execution is
/// thread-safe. Neither direction is normalized.
class Fft3d {
 public:
  static const Fft3d& get(int n);

  int n() const noexcept { return n_; }
  /// data <- sum_x data(x) exp(-i k.x)
  void forward(std::span<std::complex<double>> data) const;
  /// data <- sum_k data(k) exp(+i k.x)
  void backward(std::span<std::complex<double>> data) const;

  ~Fft3d();
  Fft3d(const Fft3d&) = delete;
  Fft3d& operator=(const Fft3d&) = delete;

 private:
  explicit Fft3d(int n);
  int n_;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

}  // namespace ldm

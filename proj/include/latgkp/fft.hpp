#pragma once

#include <complex>
#include <mutex>

#include <Eigen/Dense>
#include <fftw3.h>

namespace latgkp {

inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

/// Complex 1D FFT of a fixed size, backed by FFTW.  Plan creation is
/// serialized (FFTW's planner is not thread-safe); execution on caller
/// buffers is safe from any thread.  ifft includes the 1/n factor.
class Fft {
 public:
  explicit Fft(int n) : n_(n) {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    buf_ = fftw_alloc_complex(static_cast<size_t>(n));
    fwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  ~Fft() {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(buf_);
  }

  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  int size() const { return n_; }

  void forward_inplace(Eigen::VectorXcd& v) const {
    auto* p = reinterpret_cast<fftw_complex*>(v.data());
    fftw_execute_dft(fwd_, p, p);
  }

  void backward_inplace(Eigen::VectorXcd& v) const {
    auto* p = reinterpret_cast<fftw_complex*>(v.data());
    fftw_execute_dft(bwd_, p, p);
    v *= 1.0 / n_;
  }

 private:
  int n_;
  fftw_complex* buf_;
  fftw_plan fwd_;
  fftw_plan bwd_;
};

}  // namespace latgkp

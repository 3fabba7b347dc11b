#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <span>

namespace gpblend::detail {

/// Forward/backward real 2-D DFT over one private pair of aligned buffers.
/// Plans are created and destroyed under a process-wide lock because the
/// FFTW planner is not re-entrant; executing them needs no lock.
class RealFft2d {
 public:
  RealFft2d(int height, int width);
  ~RealFft2d();
  RealFft2d(const RealFft2d&) = delete;
  RealFft2d& operator=(const RealFft2d&) = delete;

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  /// Columns of the half spectrum.
  int spectrum_width() const noexcept { return width_ / 2 + 1; }

  std::span<double> real() noexcept { return {real_, static_cast<std::size_t>(height_) * width_}; }
  std::span<std::complex<double>> spectrum() noexcept {
    return {reinterpret_cast<std::complex<double>*>(spectrum_),
            static_cast<std::size_t>(height_) * spectrum_width()};
  }

  /// real() -> spectrum()
  void forward() noexcept { fftw_execute(forward_); }
  /// spectrum() -> real(), unnormalized (scaled by height*width). Clobbers
  /// spectrum().
  void backward() noexcept { fftw_execute(backward_); }

 private:
  int height_;
  int width_;
  double* real_ = nullptr;
  fftw_complex* spectrum_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

}  // namespace gpblend::detail

#include "fft.hpp"

#include <mutex>
#include <new>

namespace gpblend::detail {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

RealFft2d::RealFft2d(int height, int width) : height_(height), width_(width) {
  const std::size_t n_real = static_cast<std::size_t>(height) * width;
  const std::size_t n_spec = static_cast<std::size_t>(height) * spectrum_width();
  std::lock_guard lock(planner_mutex());
  real_ = fftw_alloc_real(n_real);
  spectrum_ = fftw_alloc_complex(n_spec);
  if (real_ == nullptr || spectrum_ == nullptr) {
    fftw_free(real_);
    fftw_free(spectrum_);
    throw std::bad_alloc();
  }
  // FFTW_ESTIMATE never touches the buffers and yields the same plan on
  // every call, which keeps results reproducible.
  forward_ = fftw_plan_dft_r2c_2d(height, width, real_, spectrum_, FFTW_ESTIMATE);
  backward_ = fftw_plan_dft_c2r_2d(height, width, spectrum_, real_, FFTW_ESTIMATE);
}

RealFft2d::~RealFft2d() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(forward_);
  fftw_destroy_plan(backward_);
  fftw_free(real_);
  fftw_free(spectrum_);
}

}  // namespace gpblend::detail

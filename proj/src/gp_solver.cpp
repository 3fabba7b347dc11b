#include "gpblend/gp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "fft.hpp"
#include "gpblend/error.hpp"
#include "gpblend/gradient.hpp"

namespace gpblend {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> axis_laplacian(int n) {
  std::vector<double> t(n);
  for (int k = 0; k < n; ++k) t[k] = 2.0 * std::cos(kTwoPi * k / n) - 2.0;
  return t;
}

std::vector<double> axis_kernel(std::span<const double> kernel, int n, int count) {
  std::vector<double> t(count);
  for (int k = 0; k < count; ++k) t[k] = kernel_transfer(kernel, kTwoPi * k / n);
  return t;
}

}  // namespace

void GpParams::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw Error(ErrorKind::BetaNonPositive, "beta must be positive");
  if (gauss_kernel.empty() || gauss_kernel.size() % 2 == 0)
    throw Error(ErrorKind::BadKernel, "gaussian kernel must have odd length");
  double sum = 0.0;
  const std::size_t n = gauss_kernel.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(gauss_kernel[i] >= 0.0))
      throw Error(ErrorKind::BadKernel, "gaussian kernel entries must be non-negative");
    if (gauss_kernel[i] != gauss_kernel[n - 1 - i])
      throw Error(ErrorKind::BadKernel, "gaussian kernel must be symmetric");
    sum += gauss_kernel[i];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error(ErrorKind::BadKernel, "gaussian kernel must sum to 1");
  if (!(eps >= 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be non-negative");
  if (scales && *scales < 1) throw Error(ErrorKind::InvalidArgument, "scales must be >= 1");
}

std::vector<double> normalized_kernel(std::span<const double> weights) {
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (!(sum > 0.0)) throw Error(ErrorKind::BadKernel, "kernel weights must have positive sum");
  std::vector<double> k(weights.begin(), weights.end());
  for (double& w : k) w /= sum;
  return k;
}

double kernel_transfer(std::span<const double> kernel, double theta) {
  const int r = static_cast<int>(kernel.size()) / 2;
  double t = kernel[r];
  for (int j = 1; j <= r; ++j) t += 2.0 * kernel[r + j] * std::cos(j * theta);
  return t;
}

double laplacian_transfer(int ky, int kx, int height, int width) {
  return 2.0 * std::cos(kTwoPi * kx / width) + 2.0 * std::cos(kTwoPi * ky / height) - 4.0;
}

ImageF gaussian_filter(const ImageF& img, std::span<const double> kernel) {
  const int w = img.width(), h = img.height();
  const int r = static_cast<int>(kernel.size()) / 2;
  auto wrap = [](int i, int n) { return ((i % n) + n) % n; };
  ImageF tmp(w, h, img.channels());
  ImageF out(w, h, img.channels());
  for (int c = 0; c < img.channels(); ++c) {
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int j = -r; j <= r; ++j) acc += kernel[j + r] * img.at(c, y, wrap(x + j, w));
        tmp.at(c, y, x) = acc;
      }
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int j = -r; j <= r; ++j) acc += kernel[j + r] * tmp.at(c, wrap(y + j, h), x);
        out.at(c, y, x) = acc;
      }
  }
  return out;
}

double gp_objective(const ImageF& x, const ImageF& u, const ImageF& guide,
                    const GpParams& params) {
  require_same_shape(x, u, "gp_objective");
  require_same_shape(x, guide, "gp_objective");
  const ImageF lx = laplacian(x);
  const ImageF gx = gaussian_filter(x, params.gauss_kernel);
  double gradient_term = 0.0, colour_term = 0.0;
  for (std::size_t i = 0; i < x.data().size(); ++i) {
    const double a = u.data()[i] - lx.data()[i];
    const double b = gx.data()[i] - guide.data()[i];
    gradient_term += a * a;
    colour_term += b * b;
  }
  return gradient_term + params.beta * colour_term;
}

ImageF solve_gp(const ImageF& u, const ImageF& guide, const GpParams& params) {
  params.validate();
  require_same_shape(u, guide, "solve_gp");
  const int w = u.width(), h = u.height();
  const int wc = w / 2 + 1;

  const std::vector<double> lx = axis_laplacian(w), ly = axis_laplacian(h);
  const std::vector<double> gx = axis_kernel(params.gauss_kernel, w, wc);
  const std::vector<double> gy = axis_kernel(params.gauss_kernel, h, h);
  const double beta = params.beta;
  const double eps = params.eps;
  const double norm = 1.0 / (static_cast<double>(w) * h);

  ImageF out(w, h, u.channels());
  const int channels = u.channels();
#pragma omp parallel for schedule(static) if (channels > 1)
  for (int c = 0; c < channels; ++c) {
    detail::RealFft2d fft(h, w);
    auto real = fft.real();
    auto spec = fft.spectrum();

    const auto pu = u.plane(c);
    std::copy(pu.begin(), pu.end(), real.begin());
    fft.forward();
    const std::vector<std::complex<double>> u_hat(spec.begin(), spec.end());

    const auto pg = guide.plane(c);
    std::copy(pg.begin(), pg.end(), real.begin());
    fft.forward();

    for (int ky = 0; ky < h; ++ky) {
      for (int kx = 0; kx < wc; ++kx) {
        const std::size_t i = static_cast<std::size_t>(ky) * wc + kx;
        const double l = lx[kx] + ly[ky];
        const double g = gx[kx] * gy[ky];
        spec[i] = (l * u_hat[i] + beta * g * spec[i]) / (l * l + beta * g * g + eps);
      }
    }
    fft.backward();
    auto po = out.plane(c);
    for (std::size_t i = 0; i < po.size(); ++i) po[i] = real[i] * norm;
  }
  return out;
}

}  // namespace gpblend

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gpblend/image.hpp"

namespace gpblend {

/// Knobs of the Gaussian-Poisson solve and of the coarse-to-fine pipeline.
struct GpParams {
  /// Weight of the colour term. The same quantity is written beta and lambda
  /// in different places; it is one knob here.
  double beta = 1.0;
  /// Symmetric, odd-length, non-negative, unit-sum kernel applied on both axes.
  std::vector<double> gauss_kernel = {0.25, 0.5, 0.25};
  /// Added to every frequency denominator.
  double eps = 1e-12;
  /// Pyramid depth; empty selects the automatic rule.
  std::optional<int> scales;

  /// Throws BetaNonPositive or BadKernel.
  void validate() const;
};

/// Normalizes integer-ish weights such as {1,2,1} to unit sum.
std::vector<double> normalized_kernel(std::span<const double> weights);

/// Real transfer function of a symmetric odd-length kernel at angular
/// frequency theta: k0 + 2 * sum_j k_j cos(j theta).
double kernel_transfer(std::span<const double> kernel, double theta);

/// Real transfer function of the circular 5-point Laplacian at DFT bin
/// (ky, kx) of an h x w grid.
double laplacian_transfer(int ky, int kx, int height, int width);

/// Circular separable convolution with `kernel` on both axes.
ImageF gaussian_filter(const ImageF& img, std::span<const double> kernel);

/// ||u - L x||^2 + beta ||G x - guide||^2 evaluated in the pixel domain.
double gp_objective(const ImageF& x, const ImageF& u, const ImageF& guide,
                    const GpParams& params);

/// Minimizer of gp_objective under periodic boundaries, computed per channel
/// in closed form in the Fourier domain. The result is not clamped.
ImageF solve_gp(const ImageF& u, const ImageF& guide, const GpParams& params);

}  // namespace gpblend

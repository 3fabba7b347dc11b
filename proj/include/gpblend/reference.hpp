#pragma once

#include "gpblend/gp_solver.hpp"
#include "gpblend/gradient.hpp"
#include "gpblend/image.hpp"

// Serial, straightforward versions of the parallel kernels. They exist for
// the test suite and the benchmark and are not used by the library itself.
namespace gpblend::reference {

ImageF composite(const ImageF& src, const ImageF& dst, const MaskImage& mask);
VectorField gradients(const ImageF& img);
ImageF divergence(const VectorField& field);
ImageF laplacian(const ImageF& img);

/// Blurs every pixel, then decimates.
ImageF downsample(const ImageF& img);
ImageF upsample(const ImageF& img, int target_width, int target_height);

/// Gaussian-Poisson solve through a direct O(N (w + h)) separable DFT.
ImageF solve_gp(const ImageF& u, const ImageF& guide, const GpParams& params);

}  // namespace gpblend::reference

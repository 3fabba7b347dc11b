#pragma once

#include <span>

#include "gpblend/image.hpp"

// Independent reference computations for frozen expectations. Nothing here
// shares code with the solver paths under test.
namespace gpblend::testing {

/// Dense normal equations (L^T L + beta G^T G) x = L^T u + beta G^T guide
/// with explicit circular N x N matrices. Single channel, small images only.
ImageF dense_gp_solve(const ImageF& u, const ImageF& guide, double beta,
                      std::span<const double> kernel);

/// Dense solve of laplacian(x) = u on mask pixels with x = dst elsewhere,
/// built from the explicit circular Laplacian matrix.
ImageF dense_dirichlet_solve(const ImageF& u, const ImageF& dst, const MaskImage& mask);

/// Full 5x5 binomial convolution (edge replicate) followed by decimation.
ImageF direct_downsample(const ImageF& img);

/// Pads the coarse grid by replication, zero-inserts onto a canvas, applies
/// the full 5x5 kernel times four and crops.
ImageF direct_upsample(const ImageF& img, int target_width, int target_height);

}  // namespace gpblend::testing

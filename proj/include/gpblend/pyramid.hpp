#pragma once

#include <vector>

#include "gpblend/image.hpp"

namespace gpblend {

enum class PyramidKind { Gaussian, Laplacian };

/// Multi-scale stack. `levels.front()` is the coarsest scale and
/// `levels.back()` the input resolution; each level is ceil(next / 2).
struct Pyramid {
  PyramidKind kind = PyramidKind::Gaussian;
  std::vector<ImageF> levels;

  int scales() const noexcept { return static_cast<int>(levels.size()); }
  const ImageF& coarsest() const { return levels.front(); }
  const ImageF& finest() const { return levels.back(); }
};

/// Binomial [1,4,6,4,1]/16 blur (edge replicated) followed by keeping every
/// second sample starting at 0. Output is ceil(w/2) x ceil(h/2).
ImageF downsample(const ImageF& img);

/// Zero insertion to the target grid followed by the 2*[1,4,6,4,1]/16 kernel
/// on each axis. Edge replication applies to the coarse grid, so constants
/// are preserved everywhere including the borders.
ImageF upsample(const ImageF& img, int target_width, int target_height);

Pyramid build_gaussian(const ImageF& img, int scales);
Pyramid build_laplacian(const ImageF& img, int scales);
ImageF reconstruct(const Pyramid& pyramid);

/// Nearest-neighbour decimation, the mask counterpart of downsample().
MaskImage decimate_mask(const MaskImage& mask);

/// Masks for every scale, coarsest first, each a hard binary selector.
std::vector<MaskImage> mask_pyramid(const MaskImage& mask, int scales);

/// Burt-Adelson multi-band blend: Laplacian levels of src and dst mixed by
/// the Gaussian pyramid of the (float) mask, reconstructed and clamped.
ImageF multiband_blend(const ImageF& src, const ImageF& dst, const MaskImage& mask, int scales);

/// Deepest pyramid whose coarsest level keeps min-dimension >= 8.
int auto_multiband_scales(int width, int height);

}  // namespace gpblend

#pragma once

#include "gpblend/image.hpp"

namespace gpblend {

/// Mean squared difference between gradients(blended) and the composite
/// field of (src, dst, mask), over both components and all channels.
double gradient_mse(const ImageF& blended, const ImageF& src, const ImageF& dst,
                    const MaskImage& mask);

/// MSE between the downsample chain of `blended` (reduced to the guide's
/// largest side, then resized to the guide grid if needed) and `guide`.
double colour_mse(const ImageF& blended, const ImageF& guide);

/// Discontinuities along mask boundaries compared with the image's typical
/// row-to-row and column-to-column variation. A seam discontinuity is the
/// channel-mean |step - v| of a step that crosses the mask boundary, where v
/// is the composite field of (src, dst, mask): the part of the jump that the
/// intended gradients do not explain. Each row (column) pair averages it over
/// its boundary crossings; the median averages the plain |step| over every
/// pixel of the row (column) pair.
struct SeamProfile {
  double worst_seam_row = 0.0;
  double median_row = 0.0;
  double worst_seam_col = 0.0;
  double median_col = 0.0;
  bool has_seam = false;

  /// Largest seam step over its median counterpart.
  double ratio() const;
};

SeamProfile seam_profile(const ImageF& img, const ImageF& src, const ImageF& dst,
                         const MaskImage& mask);

}  // namespace gpblend

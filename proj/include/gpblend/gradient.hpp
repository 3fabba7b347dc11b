#pragma once

#include "gpblend/image.hpp"

namespace gpblend {

/// Per-channel forward differences. gx and gy share the shape of the image
/// they were taken from.
struct VectorField {
  ImageF gx;
  ImageF gy;

  int width() const noexcept { return gx.width(); }
  int height() const noexcept { return gx.height(); }
  int channels() const noexcept { return gx.channels(); }
};

/// Forward differences with circular wrap at the last row and column:
/// gx(y,x) = I(y,x+1) - I(y,x), gy(y,x) = I(y+1,x) - I(y,x).
VectorField gradients(const ImageF& img);

/// Gradient of src where the mask is set, of dst elsewhere. Both gradients
/// are taken on the full images before the per-pixel selection.
VectorField composite_field(const ImageF& src, const ImageF& dst, const MaskImage& mask);

/// Backward-difference divergence with circular wrap; the negative adjoint
/// of gradients().
ImageF divergence(const VectorField& field);

/// Circular 5-point Laplacian [[0,1,0],[1,-4,1],[0,1,0]].
ImageF laplacian(const ImageF& img);

}  // namespace gpblend

#pragma once

#include <optional>
#include <string_view>

#include "gpblend/gp_solver.hpp"
#include "gpblend/guide.hpp"
#include "gpblend/image.hpp"

namespace gpblend {

enum class Method { GpGan, Poisson, Multiband, CopyPaste };

const char* to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

struct BlendRequest {
  ImageF src;
  ImageF dst;
  MaskImage mask;
  Method method = Method::GpGan;
  GuideSpec guide;
  GpParams params;
};

struct BlendResult {
  ImageF image;
  /// Pyramid depth used (1 for single-scale methods).
  int scales = 1;
  /// False when the Poisson baseline stopped at max_iter.
  bool converged = true;
};

/// Dispatches to the chosen method. The output has the input shape and is
/// clamped to [0,1].
BlendResult blend(const BlendRequest& request);

/// 1 + ceil(log2(max(w,h) / 64)), at least 1: the coarsest level then has
/// max-dimension <= 64.
int auto_gp_scales(int width, int height);

/// Coarse-to-fine Gaussian-Poisson blending. `guide` is the low-resolution
/// colour constraint; it is bilinearly resized to the coarsest level when its
/// dimensions differ.
ImageF gp_gan_blend(const ImageF& src, const ImageF& dst, const MaskImage& mask,
                    const ImageF& guide, const GpParams& params);

/// Classical seamless cloning: composite gradients, Dirichlet boundary from
/// dst outside the mask.
ImageF poisson_blend(const ImageF& src, const ImageF& dst, const MaskImage& mask,
                     bool* converged = nullptr);

ImageF multiband_blend_strategy(const ImageF& src, const ImageF& dst, const MaskImage& mask,
                                int scales);

}  // namespace gpblend

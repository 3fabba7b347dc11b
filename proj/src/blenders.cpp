#include "gpblend/blenders.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gpblend/dirichlet.hpp"
#include "gpblend/error.hpp"
#include "gpblend/gradient.hpp"
#include "gpblend/pyramid.hpp"

namespace gpblend {

const char* to_string(Method method) {
  switch (method) {
    case Method::GpGan: return "gp-gan";
    case Method::Poisson: return "poisson";
    case Method::Multiband: return "multiband";
    case Method::CopyPaste: return "copy-paste";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::GpGan, Method::Poisson, Method::Multiband, Method::CopyPaste})
    if (name == to_string(m)) return m;
  return std::nullopt;
}

int auto_gp_scales(int width, int height) {
  int d = std::max(width, height);
  int scales = 1;
  while (d > 64) {
    d = (d + 1) / 2;
    ++scales;
  }
  return scales;
}

ImageF gp_gan_blend(const ImageF& src, const ImageF& dst, const MaskImage& mask,
                    const ImageF& guide, const GpParams& params) {
  params.validate();
  require_same_shape(src, dst, "gp_gan_blend");
  require_same_dims(src, mask, "gp_gan_blend");
  if (guide.empty() || guide.channels() != src.channels())
    throw Error(ErrorKind::GuideDimensionMismatch,
                "guide has " + std::to_string(guide.channels()) + " channels, images have " +
                    std::to_string(src.channels()));

  const int scales = params.scales.value_or(auto_gp_scales(src.width(), src.height()));
  const Pyramid src_levels = build_gaussian(src, scales);
  const Pyramid dst_levels = build_gaussian(dst, scales);
  const std::vector<MaskImage> masks = mask_pyramid(mask, scales);

  const ImageF& coarsest = src_levels.coarsest();
  ImageF colour = resize_bilinear(guide, coarsest.width(), coarsest.height());
  ImageF result;
  for (int s = 0; s < scales; ++s) {
    const ImageF u =
        divergence(composite_field(src_levels.levels[s], dst_levels.levels[s], masks[s]));
    result = solve_gp(u, colour, params);
    if (s + 1 < scales) {
      const ImageF& finer = src_levels.levels[s + 1];
      colour = upsample(result, finer.width(), finer.height());
    }
  }
  return clamp01(std::move(result));
}

ImageF poisson_blend(const ImageF& src, const ImageF& dst, const MaskImage& mask,
                     bool* converged) {
  const ImageF u = divergence(composite_field(src, dst, mask));
  DirichletResult r = solve_poisson_dirichlet(u, dst, mask);
  if (converged != nullptr) *converged = r.converged;
  return clamp01(std::move(r.image));
}

ImageF multiband_blend_strategy(const ImageF& src, const ImageF& dst, const MaskImage& mask,
                                int scales) {
  return multiband_blend(src, dst, mask, scales);
}

BlendResult blend(const BlendRequest& req) {
  require_same_shape(req.src, req.dst, "blend");
  require_same_dims(req.src, req.mask, "blend");
  if (req.src.channels() != 3)
    throw Error(ErrorKind::DimensionMismatch, "blend expects three-channel images");

  BlendResult out;
  switch (req.method) {
    case Method::CopyPaste:
      out.image = clamp01(composite(req.src, req.dst, req.mask));
      break;
    case Method::Poisson:
      out.image = poisson_blend(req.src, req.dst, req.mask, &out.converged);
      break;
    case Method::Multiband:
      out.scales =
          req.params.scales.value_or(auto_multiband_scales(req.src.width(), req.src.height()));
      out.image = multiband_blend_strategy(req.src, req.dst, req.mask, out.scales);
      break;
    case Method::GpGan: {
      req.params.validate();
      const ImageF guide = resolve_guide(req.guide, req.src, req.dst, req.mask);
      out.scales = req.params.scales.value_or(auto_gp_scales(req.src.width(), req.src.height()));
      GpParams params = req.params;
      params.scales = out.scales;
      out.image = gp_gan_blend(req.src, req.dst, req.mask, guide, params);
      break;
    }
  }
  return out;
}

}  // namespace gpblend

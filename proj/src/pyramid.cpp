#include "gpblend/pyramid.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>

#include "gpblend/error.hpp"

namespace gpblend {
namespace {

constexpr std::array<double, 5> kBinomial = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};

int clamp_index(int i, int n) { return std::clamp(i, 0, n - 1); }

// Up to three coarse samples contribute to one fine sample of the
// zero-inserted, doubled-gain interpolation.
struct UpsampleTaps {
  std::array<int, 3> index{};
  std::array<double, 3> weight{};
  int count = 0;
};

std::vector<UpsampleTaps> upsample_taps(int coarse, int fine) {
  std::vector<UpsampleTaps> taps(fine);
  for (int x = 0; x < fine; ++x) {
    for (int k = 0; k < 5; ++k) {
      const int pos = x + k - 2;
      if (pos % 2 != 0) continue;
      auto& t = taps[x];
      t.index[t.count] = clamp_index(pos / 2, coarse);
      t.weight[t.count] = 2.0 * kBinomial[k];
      ++t.count;
    }
  }
  return taps;
}

bool valid_target(int coarse, int fine) { return fine == 2 * coarse || fine == 2 * coarse - 1; }

}  // namespace

ImageF downsample(const ImageF& img) {
  const int w = img.width(), h = img.height();
  if (w < 2 || h < 2)
    throw Error(ErrorKind::ImageTooSmall, "downsample needs at least 2x2, got " +
                                              std::to_string(w) + "x" + std::to_string(h));
  const int ow = (w + 1) / 2, oh = (h + 1) / 2;
  ImageF out(ow, oh, img.channels());
  std::vector<double> rows(static_cast<std::size_t>(h) * ow);

  for (int c = 0; c < img.channels(); ++c) {
    const auto in = img.plane(c);
    auto dst = out.plane(c);
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
      const double* row = in.data() + static_cast<std::size_t>(y) * w;
      for (int ox = 0; ox < ow; ++ox) {
        const int x = 2 * ox;
        double acc = 0.0;
        for (int k = 0; k < 5; ++k) acc += kBinomial[k] * row[clamp_index(x + k - 2, w)];
        rows[static_cast<std::size_t>(y) * ow + ox] = acc;
      }
    }
#pragma omp parallel for schedule(static)
    for (int oy = 0; oy < oh; ++oy) {
      const int y = 2 * oy;
      for (int ox = 0; ox < ow; ++ox) {
        double acc = 0.0;
        for (int k = 0; k < 5; ++k)
          acc += kBinomial[k] * rows[static_cast<std::size_t>(clamp_index(y + k - 2, h)) * ow + ox];
        dst[static_cast<std::size_t>(oy) * ow + ox] = acc;
      }
    }
  }
  return out;
}

ImageF upsample(const ImageF& img, int target_width, int target_height) {
  const int w = img.width(), h = img.height();
  if (!valid_target(w, target_width) || !valid_target(h, target_height))
    throw Error(ErrorKind::BadTargetDims,
                "cannot upsample " + std::to_string(w) + "x" + std::to_string(h) + " to " +
                    std::to_string(target_width) + "x" + std::to_string(target_height));
  const auto xt = upsample_taps(w, target_width);
  const auto yt = upsample_taps(h, target_height);
  ImageF out(target_width, target_height, img.channels());
  std::vector<double> rows(static_cast<std::size_t>(h) * target_width);

  for (int c = 0; c < img.channels(); ++c) {
    const auto in = img.plane(c);
    auto dst = out.plane(c);
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
      const double* row = in.data() + static_cast<std::size_t>(y) * w;
      for (int x = 0; x < target_width; ++x) {
        const auto& t = xt[x];
        double acc = 0.0;
        for (int k = 0; k < t.count; ++k) acc += t.weight[k] * row[t.index[k]];
        rows[static_cast<std::size_t>(y) * target_width + x] = acc;
      }
    }
#pragma omp parallel for schedule(static)
    for (int y = 0; y < target_height; ++y) {
      const auto& t = yt[y];
      for (int x = 0; x < target_width; ++x) {
        double acc = 0.0;
        for (int k = 0; k < t.count; ++k)
          acc += t.weight[k] * rows[static_cast<std::size_t>(t.index[k]) * target_width + x];
        dst[static_cast<std::size_t>(y) * target_width + x] = acc;
      }
    }
  }
  return out;
}

Pyramid build_gaussian(const ImageF& img, int scales) {
  if (scales < 1) throw Error(ErrorKind::TooManyLevels, "a pyramid needs at least one scale");
  Pyramid p{PyramidKind::Gaussian, {}};
  p.levels.resize(scales);
  p.levels.back() = img;
  for (int s = scales - 1; s > 0; --s) {
    const ImageF& finer = p.levels[s];
    if (finer.width() < 3 || finer.height() < 3)
      throw Error(ErrorKind::TooManyLevels,
                  std::to_string(scales) + " scales would shrink " + std::to_string(img.width()) +
                      "x" + std::to_string(img.height()) + " below 2 pixels");
    p.levels[s - 1] = downsample(finer);
  }
  return p;
}

Pyramid build_laplacian(const ImageF& img, int scales) {
  Pyramid p = build_gaussian(img, scales);
  // Differences are taken fine-to-coarse so each step still sees the
  // Gaussian level below it.
  for (int s = scales - 1; s > 0; --s) {
    const ImageF up = upsample(p.levels[s - 1], p.levels[s].width(), p.levels[s].height());
    auto& level = p.levels[s].data();
    for (std::size_t i = 0; i < level.size(); ++i) level[i] -= up.data()[i];
  }
  p.kind = PyramidKind::Laplacian;
  return p;
}

ImageF reconstruct(const Pyramid& pyramid) {
  if (pyramid.kind != PyramidKind::Laplacian)
    throw Error(ErrorKind::WrongKind, "reconstruct expects a Laplacian pyramid");
  if (pyramid.levels.empty()) throw Error(ErrorKind::InvalidArgument, "empty pyramid");
  ImageF r = pyramid.levels.front();
  for (int s = 1; s < pyramid.scales(); ++s) {
    const ImageF& band = pyramid.levels[s];
    r = upsample(r, band.width(), band.height());
    auto& data = r.data();
    for (std::size_t i = 0; i < data.size(); ++i) data[i] += band.data()[i];
  }
  return r;
}

MaskImage decimate_mask(const MaskImage& mask) {
  const int ow = (mask.width() + 1) / 2, oh = (mask.height() + 1) / 2;
  MaskImage out(ow, oh);
  for (int y = 0; y < oh; ++y)
    for (int x = 0; x < ow; ++x) out.set(y, x, mask.selected(2 * y, 2 * x));
  return out;
}

std::vector<MaskImage> mask_pyramid(const MaskImage& mask, int scales) {
  if (scales < 1) throw Error(ErrorKind::TooManyLevels, "a pyramid needs at least one scale");
  std::vector<MaskImage> levels(scales);
  levels.back() = mask;
  for (int s = scales - 1; s > 0; --s) levels[s - 1] = decimate_mask(levels[s]);
  return levels;
}

ImageF multiband_blend(const ImageF& src, const ImageF& dst, const MaskImage& mask, int scales) {
  require_same_shape(src, dst, "multiband_blend");
  require_same_dims(src, mask, "multiband_blend");
  const Pyramid ls = build_laplacian(src, scales);
  const Pyramid ld = build_laplacian(dst, scales);
  const Pyramid weights = build_gaussian(mask.as_image(), scales);

  Pyramid mixed{PyramidKind::Laplacian, {}};
  mixed.levels.reserve(scales);
  for (int s = 0; s < scales; ++s) {
    const ImageF& a = ls.levels[s];
    const ImageF& b = ld.levels[s];
    const auto wgt = weights.levels[s].plane(0);
    ImageF level(a.width(), a.height(), a.channels());
    for (int c = 0; c < a.channels(); ++c) {
      const auto pa = a.plane(c), pb = b.plane(c);
      auto out = level.plane(c);
      const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = wgt[i] * pa[i] + (1.0 - wgt[i]) * pb[i];
    }
    mixed.levels.push_back(std::move(level));
  }
  return clamp01(reconstruct(mixed));
}

int auto_multiband_scales(int width, int height) {
  int d = std::min(width, height);
  int scales = 1;
  while ((d + 1) / 2 >= 8) {
    d = (d + 1) / 2;
    ++scales;
  }
  return scales;
}

}  // namespace gpblend

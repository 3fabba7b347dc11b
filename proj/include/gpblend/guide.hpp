#pragma once

#include <filesystem>
#include <string_view>

#include "gpblend/image.hpp"

namespace gpblend {

enum class GuideKind { Downsample, File };

/// Where the low-resolution colour constraint comes from.
struct GuideSpec {
  GuideKind kind = GuideKind::Downsample;
  /// Required for GuideKind::File.
  std::filesystem::path path;
  /// Guide side length in pixels.
  int size = 64;

  void validate() const;

  /// "downsample" or "file:PATH".
  static GuideSpec parse(std::string_view text);
};

/// Applies downsample() until max(width, height) <= max_dim.
ImageF downsample_to(const ImageF& img, int max_dim);

/// Downsample: the composite reduced by downsample_to(size). File: the PNG at
/// `path`, which must be size x size RGB.
ImageF resolve_guide(const GuideSpec& spec, const ImageF& src, const ImageF& dst,
                     const MaskImage& mask);

}  // namespace gpblend

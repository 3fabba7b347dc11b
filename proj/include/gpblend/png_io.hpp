#pragma once

#include <filesystem>

#include "gpblend/image.hpp"

namespace gpblend {

/// Reads an 8- or 16-bit grayscale or RGB PNG (palette and alpha variants are
/// expanded / stripped). Samples are divided by the type maximum.
ImageF load_image(const std::filesystem::path& path);

/// Writes an 8-bit PNG with the image's channel count. Samples are clamped to
/// [0,1] and rounded half-up.
void save_image(const ImageF& img, const std::filesystem::path& path);

/// Loads any supported PNG and binarizes its luminance with `v > threshold`.
MaskImage load_mask(const std::filesystem::path& path, double threshold = 0.5);

void save_mask(const MaskImage& mask, const std::filesystem::path& path);

/// 8-bit quantization used by save_image.
unsigned char to_byte(double v) noexcept;

}  // namespace gpblend

#pragma once

#include <cstdint>

#include "gpblend/gradient.hpp"
#include "gpblend/image.hpp"

namespace gpblend::testing {

/// Uniform samples in [lo, hi), reproducible per seed.
ImageF random_image(int width, int height, int channels, std::uint32_t seed, double lo = 0.0,
                    double hi = 1.0);

/// Smooth random image: a few low-frequency cosines, values in [0,1].
ImageF smooth_random_image(int width, int height, int channels, std::uint32_t seed);

MaskImage random_mask(int width, int height, std::uint32_t seed, double density = 0.5);

/// Columns [0, split) selected.
MaskImage left_mask(int width, int height, int split);

VectorField random_field(int width, int height, int channels, std::uint32_t seed);

double relative_l2(const ImageF& actual, const ImageF& expected);
double inner(const ImageF& a, const ImageF& b);

}  // namespace gpblend::testing

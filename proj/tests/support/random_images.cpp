#include "support/random_images.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace gpblend::testing {

ImageF random_image(int width, int height, int channels, std::uint32_t seed, double lo,
                    double hi) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  ImageF img(width, height, channels);
  for (double& v : img.data()) v = d(rng);
  return img;
}

ImageF smooth_random_image(int width, int height, int channels, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  ImageF img(width, height, channels);
  for (int c = 0; c < channels; ++c) {
    const double base = 0.3 + 0.4 * d(rng);
    struct Wave { double fx, fy, phase, amp; };
    Wave waves[3];
    for (auto& w : waves) w = {d(rng) * 2.0, d(rng) * 2.0, d(rng) * 6.28, 0.05 + 0.05 * d(rng)};
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) {
        double v = base;
        for (const auto& w : waves)
          v += w.amp * std::cos(2 * std::numbers::pi * (w.fx * x / width + w.fy * y / height) + w.phase);
        img.at(c, y, x) = v;
      }
  }
  return img;
}

MaskImage random_mask(int width, int height, std::uint32_t seed, double density) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution d(density);
  MaskImage m(width, height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) m.set(y, x, d(rng));
  return m;
}

MaskImage left_mask(int width, int height, int split) {
  MaskImage m(width, height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < split; ++x) m.set(y, x, true);
  return m;
}

VectorField random_field(int width, int height, int channels, std::uint32_t seed) {
  return {random_image(width, height, channels, seed, -1.0, 1.0),
          random_image(width, height, channels, seed + 7919, -1.0, 1.0)};
}

double relative_l2(const ImageF& actual, const ImageF& expected) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < actual.data().size(); ++i) {
    const double d = actual.data()[i] - expected.data()[i];
    num += d * d;
    den += expected.data()[i] * expected.data()[i];
  }
  return std::sqrt(num) / std::sqrt(den);
}

double inner(const ImageF& a, const ImageF& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += a.data()[i] * b.data()[i];
  return s;
}

}  // namespace gpblend::testing

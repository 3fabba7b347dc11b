#include "gpblend/reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace gpblend::reference {
namespace {

constexpr std::array<double, 5> kBinomial = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};

using Complex = std::complex<double>;
using Grid = std::vector<Complex>;

// In-place 1-D DFT along rows (axis 1) or columns (axis 0) of an h x w grid.
void dft_axis(Grid& g, int h, int w, int axis, bool inverse) {
  const int n = axis == 1 ? w : h;
  const int lines = axis == 1 ? h : w;
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<Complex> twiddle(n);
  for (int k = 0; k < n; ++k)
    twiddle[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * k / n);
  std::vector<Complex> line(n), out(n);
  for (int l = 0; l < lines; ++l) {
    for (int i = 0; i < n; ++i) line[i] = axis == 1 ? g[l * w + i] : g[i * w + l];
    for (int k = 0; k < n; ++k) {
      Complex acc = 0.0;
      for (int i = 0; i < n; ++i) acc += line[i] * twiddle[(static_cast<long>(k) * i) % n];
      out[k] = acc;
    }
    for (int k = 0; k < n; ++k) (axis == 1 ? g[l * w + k] : g[k * w + l]) = out[k];
  }
}

Grid dft2(std::span<const double> plane, int h, int w, bool inverse) {
  Grid g(plane.begin(), plane.end());
  dft_axis(g, h, w, 1, inverse);
  dft_axis(g, h, w, 0, inverse);
  return g;
}

}  // namespace

ImageF composite(const ImageF& src, const ImageF& dst, const MaskImage& mask) {
  ImageF out(src.width(), src.height(), src.channels());
  for (int c = 0; c < src.channels(); ++c)
    for (int y = 0; y < src.height(); ++y)
      for (int x = 0; x < src.width(); ++x)
        out.at(c, y, x) = mask.selected(y, x) ? src.at(c, y, x) : dst.at(c, y, x);
  return out;
}

VectorField gradients(const ImageF& img) {
  const int w = img.width(), h = img.height();
  VectorField f{ImageF(w, h, img.channels()), ImageF(w, h, img.channels())};
  for (int c = 0; c < img.channels(); ++c)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        f.gx.at(c, y, x) = img.at(c, y, (x + 1) % w) - img.at(c, y, x);
        f.gy.at(c, y, x) = img.at(c, (y + 1) % h, x) - img.at(c, y, x);
      }
  return f;
}

ImageF divergence(const VectorField& field) {
  const int w = field.width(), h = field.height();
  ImageF out(w, h, field.channels());
  for (int c = 0; c < field.channels(); ++c)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        out.at(c, y, x) = field.gx.at(c, y, x) - field.gx.at(c, y, (x + w - 1) % w) +
                          field.gy.at(c, y, x) - field.gy.at(c, (y + h - 1) % h, x);
  return out;
}

ImageF laplacian(const ImageF& img) {
  const int w = img.width(), h = img.height();
  ImageF out(w, h, img.channels());
  for (int c = 0; c < img.channels(); ++c)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        out.at(c, y, x) = img.at(c, (y + h - 1) % h, x) + img.at(c, (y + 1) % h, x) +
                          img.at(c, y, (x + w - 1) % w) + img.at(c, y, (x + 1) % w) -
                          4.0 * img.at(c, y, x);
  return out;
}

ImageF downsample(const ImageF& img) {
  const int w = img.width(), h = img.height();
  ImageF horiz(w, h, img.channels());
  ImageF blurred(w, h, img.channels());
  for (int c = 0; c < img.channels(); ++c) {
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int k = 0; k < 5; ++k) acc += kBinomial[k] * img.at(c, y, std::clamp(x + k - 2, 0, w - 1));
        horiz.at(c, y, x) = acc;
      }
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int k = 0; k < 5; ++k) acc += kBinomial[k] * horiz.at(c, std::clamp(y + k - 2, 0, h - 1), x);
        blurred.at(c, y, x) = acc;
      }
  }
  ImageF out((w + 1) / 2, (h + 1) / 2, img.channels());
  for (int c = 0; c < img.channels(); ++c)
    for (int y = 0; y < out.height(); ++y)
      for (int x = 0; x < out.width(); ++x) out.at(c, y, x) = blurred.at(c, 2 * y, 2 * x);
  return out;
}

ImageF upsample(const ImageF& img, int target_width, int target_height) {
  const int w = img.width(), h = img.height();
  // Zero-inserted signal on the edge-replicated coarse grid.
  auto inserted = [](int pos, int n, auto&& sample) -> double {
    if (pos % 2 != 0) return 0.0;
    return sample(std::clamp(pos / 2, 0, n - 1));
  };
  ImageF horiz(target_width, h, img.channels());
  ImageF out(target_width, target_height, img.channels());
  for (int c = 0; c < img.channels(); ++c) {
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < target_width; ++x) {
        double acc = 0.0;
        for (int k = 0; k < 5; ++k) {
          const int pos = x + k - 2;
          if (pos % 2 != 0) continue;
          acc += 2.0 * kBinomial[k] * inserted(pos, w, [&](int i) { return img.at(c, y, i); });
        }
        horiz.at(c, y, x) = acc;
      }
    for (int y = 0; y < target_height; ++y)
      for (int x = 0; x < target_width; ++x) {
        double acc = 0.0;
        for (int k = 0; k < 5; ++k) {
          const int pos = y + k - 2;
          if (pos % 2 != 0) continue;
          acc += 2.0 * kBinomial[k] * inserted(pos, h, [&](int i) { return horiz.at(c, i, x); });
        }
        out.at(c, y, x) = acc;
      }
  }
  return out;
}

ImageF solve_gp(const ImageF& u, const ImageF& guide, const GpParams& params) {
  params.validate();
  const int w = u.width(), h = u.height();
  ImageF out(w, h, u.channels());
  for (int c = 0; c < u.channels(); ++c) {
    const Grid uh = dft2(u.plane(c), h, w, false);
    Grid gh = dft2(guide.plane(c), h, w, false);
    for (int ky = 0; ky < h; ++ky)
      for (int kx = 0; kx < w; ++kx) {
        const double l = laplacian_transfer(ky, kx, h, w);
        const double g = kernel_transfer(params.gauss_kernel, 2.0 * std::numbers::pi * kx / w) *
                         kernel_transfer(params.gauss_kernel, 2.0 * std::numbers::pi * ky / h);
        Complex& v = gh[static_cast<std::size_t>(ky) * w + kx];
        v = (l * uh[static_cast<std::size_t>(ky) * w + kx] + params.beta * g * v) /
            (l * l + params.beta * g * g + params.eps);
      }
    dft_axis(gh, h, w, 1, true);
    dft_axis(gh, h, w, 0, true);
    auto po = out.plane(c);
    for (std::size_t i = 0; i < po.size(); ++i) po[i] = gh[i].real() / (static_cast<double>(w) * h);
  }
  return out;
}

}  // namespace gpblend::reference

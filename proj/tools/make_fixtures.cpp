// Writes the bundled fixture corpus: aligned pairs of a procedural outdoor
// scene under two lighting conditions, plus a binary mask per pair.
//
//   gpblend_fixtures OUT_DIR

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gpblend/image.hpp"
#include "gpblend/png_io.hpp"

namespace {

using gpblend::ImageF;
using gpblend::MaskImage;
using Rgb = std::array<double, 3>;

// Smooth lattice noise in [-1,1], summed over octaves with halving amplitude.
class ValueNoise {
 public:
  ValueNoise(unsigned seed, int cells) : cells_(cells) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    lattice_.resize(static_cast<std::size_t>(cells) * cells);
    for (double& v : lattice_) v = d(rng);
  }

  // Tiles with period 1 in both coordinates.
  double at(double u, double v) const {
    const double fx = u * cells_, fy = v * cells_;
    const double bx = std::floor(fx), by = std::floor(fy);
    const int x0 = wrap(static_cast<int>(bx)), y0 = wrap(static_cast<int>(by));
    const int x1 = wrap(x0 + 1), y1 = wrap(y0 + 1);
    const double tx = smooth(fx - bx), ty = smooth(fy - by);
    auto l = [&](int y, int x) { return lattice_[static_cast<std::size_t>(y) * cells_ + x]; };
    const double top = l(y0, x0) * (1 - tx) + l(y0, x1) * tx;
    const double bot = l(y1, x0) * (1 - tx) + l(y1, x1) * tx;
    return top * (1 - ty) + bot * ty;
  }

 private:
  static double smooth(double t) { return t * t * (3 - 2 * t); }
  int wrap(int i) const { return ((i % cells_) + cells_) % cells_; }
  int cells_;
  std::vector<double> lattice_;
};

struct Fractal {
  std::vector<ValueNoise> octaves;
  Fractal(unsigned seed, int base_cells, int count) {
    for (int i = 0; i < count; ++i) octaves.emplace_back(seed + 97 * i, base_cells << i);
  }
  double at(double u, double v) const {
    double s = 0.0, amp = 0.5;
    for (const auto& o : octaves) {
      s += amp * o.at(u, v);
      amp *= 0.5;
    }
    return s;
  }
};

Rgb mix(const Rgb& a, const Rgb& b, double t) {
  return {a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t, a[2] + (b[2] - a[2]) * t};
}

struct SceneStyle {
  Rgb sky_top, sky_horizon, far_hill, near_hill, rock;
  double horizon = 0.5;
};

ImageF render_scene(int w, int h, unsigned seed, const SceneStyle& style) {
  const Fractal ridge(seed, 3, 4), ridge2(seed + 11, 4, 4);
  const Fractal clouds(seed + 23, 4, 4), grass(seed + 37, 8, 4);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(0.2, 0.8);
  const double sun_x = d(rng), sun_y = style.horizon * 0.4;
  const double rock_x = d(rng), rock_w = 0.12 + 0.1 * d(rng);

  ImageF img(w, h, 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double u = (x + 0.5) / w, v = (y + 0.5) / h;
      const double far_line = style.horizon + 0.08 * ridge.at(u, 0.3);
      const double near_line = style.horizon + 0.18 + 0.06 * ridge2.at(u, 0.7);
      Rgb c;
      if (v < far_line) {
        c = mix(style.sky_top, style.sky_horizon, std::clamp(v / far_line, 0.0, 1.0));
        const double cloud = std::max(0.0, clouds.at(u, v * 2.0));
        c = mix(c, Rgb{0.95, 0.95, 0.97}, std::min(1.0, 1.2 * cloud));
        const double r = std::hypot(u - sun_x, (v - sun_y) * h / w);
        const double sun = std::exp(-r * r / 0.002);
        c = mix(c, Rgb{1.0, 0.96, 0.8}, 0.8 * sun);
      } else if (v < near_line) {
        c = style.far_hill;
        const double n = grass.at(u, v);
        for (double& ch : c) ch *= 1.0 + 0.25 * n - 0.3 * (v - far_line);
      } else {
        c = style.near_hill;
        const double n = grass.at(u * 1.7, v * 1.7);
        for (double& ch : c) ch *= 1.0 + 0.35 * n + 0.25 * (v - near_line);
      }
      if (std::abs(u - rock_x) < rock_w && v > near_line - 0.05 && v < near_line + 0.1) {
        const double n = grass.at(u * 3.0, v * 3.0);
        c = style.rock;
        for (double& ch : c) ch *= 1.0 + 0.3 * n;
      }
      for (int k = 0; k < 3; ++k) img.at(k, y, x) = std::clamp(c[k], 0.0, 1.0);
    }
  }
  return img;
}

// Global illumination change: per-channel gain, gamma and offset.
struct Lighting {
  Rgb gain;
  double gamma;
  Rgb offset;
};

ImageF relight(const ImageF& img, const Lighting& l) {
  ImageF out = img;
  for (int c = 0; c < 3; ++c)
    for (double& v : out.plane(c)) v = std::clamp(l.gain[c] * std::pow(v, l.gamma) + l.offset[c], 0.0, 1.0);
  return out;
}

MaskImage ellipse_mask(int w, int h, double cx, double cy, double rx, double ry) {
  MaskImage m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const double dx = ((x + 0.5) / w - cx) / rx, dy = ((y + 0.5) / h - cy) / ry;
      m.set(y, x, dx * dx + dy * dy <= 1.0);
    }
  return m;
}

MaskImage rect_mask(int w, int h, double x0, double y0, double x1, double y1) {
  MaskImage m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const double u = (x + 0.5) / w, v = (y + 0.5) / h;
      m.set(y, x, u >= x0 && u < x1 && v >= y0 && v < y1);
    }
  return m;
}

// Sky region above a wavy line, the typical sky-replacement selection.
MaskImage sky_mask(int w, int h, double horizon, unsigned seed) {
  const Fractal ridge(seed, 3, 3);
  MaskImage m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const double u = (x + 0.5) / w, v = (y + 0.5) / h;
      m.set(y, x, v < horizon + 0.05 * ridge.at(u, 0.5));
    }
  return m;
}

MaskImage blob_mask(int w, int h, unsigned seed) {
  const Fractal f(seed, 3, 3);
  MaskImage m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const double u = (x + 0.5) / w, v = (y + 0.5) / h;
      const double r = std::hypot(u - 0.5, v - 0.55);
      m.set(y, x, r + 0.12 * f.at(u, v) < 0.27);
    }
  return m;
}

const SceneStyle kMeadow{{0.30, 0.50, 0.85}, {0.72, 0.82, 0.92}, {0.35, 0.50, 0.35},
                         {0.30, 0.55, 0.20}, {0.50, 0.45, 0.40}, 0.45};
const SceneStyle kAutumn{{0.40, 0.55, 0.80}, {0.85, 0.80, 0.70}, {0.55, 0.45, 0.30},
                         {0.65, 0.40, 0.15}, {0.45, 0.42, 0.40}, 0.50};
const SceneStyle kAlpine{{0.20, 0.40, 0.75}, {0.65, 0.75, 0.90}, {0.60, 0.62, 0.70},
                         {0.25, 0.40, 0.25}, {0.55, 0.55, 0.58}, 0.40};

const Lighting kNoon{{1.0, 1.0, 1.0}, 1.0, {0.0, 0.0, 0.0}};
const Lighting kDusk{{1.05, 0.78, 0.62}, 1.25, {0.02, 0.0, 0.03}};
const Lighting kOvercast{{0.78, 0.80, 0.85}, 0.9, {0.05, 0.05, 0.06}};
const Lighting kNight{{0.38, 0.42, 0.62}, 1.1, {0.0, 0.01, 0.04}};
const Lighting kMorning{{1.0, 0.92, 0.85}, 0.85, {0.03, 0.02, 0.0}};

struct Triple {
  std::string name;
  ImageF src, dst;
  MaskImage mask;
};

std::vector<Triple> corpus() {
  std::vector<Triple> t;
  auto scene = [](int w, int h, unsigned seed, const SceneStyle& s) {
    return render_scene(w, h, seed, s);
  };
  {
    const ImageF base = scene(256, 256, 1, kMeadow);
    t.push_back({"00_meadow256_ellipse", relight(base, kDusk), relight(base, kNoon),
                 ellipse_mask(256, 256, 0.5, 0.6, 0.25, 0.2)});
  }
  {
    const ImageF base = scene(128, 128, 2, kAutumn);
    t.push_back({"01_autumn128_sky", relight(base, kMorning), relight(base, kOvercast),
                 sky_mask(128, 128, 0.45, 5)});
  }
  {
    const ImageF base = scene(128, 128, 3, kAlpine);
    t.push_back({"02_alpine128_rect", relight(base, kNight), relight(base, kNoon),
                 rect_mask(128, 128, 0.25, 0.3, 0.7, 0.8)});
  }
  {
    const ImageF base = scene(192, 160, 4, kMeadow);
    t.push_back({"03_meadow192x160_blob", relight(base, kOvercast), relight(base, kDusk),
                 blob_mask(192, 160, 8)});
  }
  {
    const ImageF base = scene(160, 96, 5, kAutumn);
    t.push_back({"04_autumn160x96_ellipse", relight(base, kNoon), relight(base, kNight),
                 ellipse_mask(160, 96, 0.4, 0.5, 0.2, 0.3)});
  }
  {
    const ImageF base = scene(128, 128, 6, kAlpine);
    t.push_back({"05_alpine128_sky", relight(base, kDusk), relight(base, kMorning),
                 sky_mask(128, 128, 0.4, 9)});
  }
  {
    // Object transfer between different scenes.
    const ImageF a = scene(128, 128, 7, kAutumn);
    const ImageF b = scene(128, 128, 8, kMeadow);
    t.push_back({"06_cross128_blob", relight(a, kMorning), relight(b, kNoon),
                 blob_mask(128, 128, 12)});
  }
  {
    const ImageF base = scene(200, 200, 9, kMeadow);
    t.push_back({"07_meadow200_rect", relight(base, kNoon), relight(base, kOvercast),
                 rect_mask(200, 200, 0.1, 0.55, 0.55, 0.95)});
  }
  {
    const ImageF base = scene(96, 128, 10, kAlpine);
    t.push_back({"08_alpine96x128_ellipse", relight(base, kMorning), relight(base, kNight),
                 ellipse_mask(96, 128, 0.55, 0.45, 0.3, 0.25)});
  }
  {
    const ImageF base = scene(144, 144, 11, kAutumn);
    t.push_back({"09_autumn144_blob", relight(base, kDusk), relight(base, kNoon),
                 blob_mask(144, 144, 15)});
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gpblend_fixtures OUT_DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  std::ofstream list(dir / "corpus.txt");
  for (const Triple& t : corpus()) {
    gpblend::save_image(t.src, dir / (t.name + "_src.png"));
    gpblend::save_image(t.dst, dir / (t.name + "_dst.png"));
    gpblend::save_mask(t.mask, dir / (t.name + "_mask.png"));
    list << t.name << '\n';
    std::cout << "wrote " << t.name << '\n';
  }
  return 0;
}

#include "gpblend/gradient.hpp"

#include <cstddef>

#include "gpblend/error.hpp"

namespace gpblend {
namespace {

inline int next(int i, int n) { return i + 1 == n ? 0 : i + 1; }
inline int prev(int i, int n) { return i == 0 ? n - 1 : i - 1; }

}  // namespace

VectorField gradients(const ImageF& img) {
  const int w = img.width(), h = img.height();
  VectorField f{ImageF(w, h, img.channels()), ImageF(w, h, img.channels())};
  for (int c = 0; c < img.channels(); ++c) {
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
      const int yn = next(y, h);
      for (int x = 0; x < w; ++x) {
        const double v = img.at(c, y, x);
        f.gx.at(c, y, x) = img.at(c, y, next(x, w)) - v;
        f.gy.at(c, y, x) = img.at(c, yn, x) - v;
      }
    }
  }
  return f;
}

VectorField composite_field(const ImageF& src, const ImageF& dst, const MaskImage& mask) {
  require_same_shape(src, dst, "composite_field");
  require_same_dims(src, mask, "composite_field");
  const VectorField fs = gradients(src);
  const VectorField fd = gradients(dst);
  return {composite(fs.gx, fd.gx, mask), composite(fs.gy, fd.gy, mask)};
}

ImageF divergence(const VectorField& field) {
  if (!field.gx.same_shape(field.gy))
    throw Error(ErrorKind::DimensionMismatch, "divergence: gx and gy differ in shape");
  const int w = field.width(), h = field.height();
  ImageF out(w, h, field.channels());
  for (int c = 0; c < field.channels(); ++c) {
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
      const int yp = prev(y, h);
      for (int x = 0; x < w; ++x) {
        out.at(c, y, x) = field.gx.at(c, y, x) - field.gx.at(c, y, prev(x, w)) +
                          field.gy.at(c, y, x) - field.gy.at(c, yp, x);
      }
    }
  }
  return out;
}

ImageF laplacian(const ImageF& img) {
  const int w = img.width(), h = img.height();
  ImageF out(w, h, img.channels());
  for (int c = 0; c < img.channels(); ++c) {
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
      const int yp = prev(y, h), yn = next(y, h);
      for (int x = 0; x < w; ++x) {
        out.at(c, y, x) = img.at(c, yp, x) + img.at(c, yn, x) + img.at(c, y, prev(x, w)) +
                          img.at(c, y, next(x, w)) - 4.0 * img.at(c, y, x);
      }
    }
  }
  return out;
}

}  // namespace gpblend

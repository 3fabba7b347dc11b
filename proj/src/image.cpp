#include "gpblend/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "gpblend/error.hpp"

namespace gpblend {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::ImageTooSmall: return "ImageTooSmall";
    case ErrorKind::BadTargetDims: return "BadTargetDims";
    case ErrorKind::TooManyLevels: return "TooManyLevels";
    case ErrorKind::WrongKind: return "WrongKind";
    case ErrorKind::BetaNonPositive: return "BetaNonPositive";
    case ErrorKind::BadKernel: return "BadKernel";
    case ErrorKind::NoExterior: return "NoExterior";
    case ErrorKind::GuideDimensionMismatch: return "GuideDimensionMismatch";
    case ErrorKind::GuideFileBadDims: return "GuideFileBadDims";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

ImageF::ImageF(int width, int height, int channels, double fill)
    : width_(width), height_(height), channels_(channels) {
  if (width < 1 || height < 1)
    throw Error(ErrorKind::InvalidArgument, "image dimensions must be at least 1x1");
  if (channels != 1 && channels != 3)
    throw Error(ErrorKind::InvalidArgument, "images have 1 or 3 channels");
  data_.assign(plane_size() * channels, fill);
}

MaskImage::MaskImage(int width, int height, double fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw Error(ErrorKind::InvalidArgument, "mask dimensions must be at least 1x1");
  data_.assign(static_cast<std::size_t>(width) * height, fill > 0.5 ? 1.0 : 0.0);
}

MaskImage MaskImage::from_values(int width, int height, std::span<const double> values,
                                 double threshold) {
  MaskImage mask(width, height);
  if (values.size() != mask.data_.size())
    throw Error(ErrorKind::DimensionMismatch, "mask values do not match dimensions");
  for (std::size_t i = 0; i < values.size(); ++i)
    mask.data_[i] = values[i] > threshold ? 1.0 : 0.0;
  return mask;
}

std::size_t MaskImage::count_selected() const noexcept {
  return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), 1.0));
}

ImageF MaskImage::as_image() const {
  ImageF img(width_, height_, 1);
  std::copy(data_.begin(), data_.end(), img.plane(0).begin());
  return img;
}

void require_same_dims(const ImageF& img, const MaskImage& mask, const char* what) {
  if (img.width() != mask.width() || img.height() != mask.height())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": mask is " + std::to_string(mask.width()) + "x" +
                    std::to_string(mask.height()) + ", image is " +
                    std::to_string(img.width()) + "x" + std::to_string(img.height()));
}

void require_same_shape(const ImageF& a, const ImageF& b, const char* what) {
  if (!a.same_shape(b))
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": image shapes differ (" + std::to_string(a.width()) +
                    "x" + std::to_string(a.height()) + "x" + std::to_string(a.channels()) +
                    " vs " + std::to_string(b.width()) + "x" + std::to_string(b.height()) +
                    "x" + std::to_string(b.channels()) + ")");
}

ImageF composite(const ImageF& src, const ImageF& dst, const MaskImage& mask) {
  require_same_shape(src, dst, "composite");
  require_same_dims(src, mask, "composite");
  ImageF out(src.width(), src.height(), src.channels());
  const auto n = static_cast<std::ptrdiff_t>(src.plane_size());
  const auto sel = mask.values();
  for (int c = 0; c < src.channels(); ++c) {
    const auto s = src.plane(c);
    const auto d = dst.plane(c);
    auto o = out.plane(c);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) o[i] = sel[i] != 0.0 ? s[i] : d[i];
  }
  return out;
}

ImageF clamp01(ImageF img) {
  for (double& v : img.data()) v = std::clamp(v, 0.0, 1.0);
  return img;
}

ImageF to_rgb(ImageF img) {
  if (img.channels() == 3) return img;
  ImageF out(img.width(), img.height(), 3);
  for (int c = 0; c < 3; ++c)
    std::copy(img.plane(0).begin(), img.plane(0).end(), out.plane(c).begin());
  return out;
}

ImageF luminance(const ImageF& img) {
  if (img.channels() == 1) return img;
  ImageF out(img.width(), img.height(), 1);
  const auto r = img.plane(0), g = img.plane(1), b = img.plane(2);
  auto o = out.plane(0);
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
  return out;
}

ImageF resize_bilinear(const ImageF& img, int width, int height) {
  if (width == img.width() && height == img.height()) return img;
  ImageF out(width, height, img.channels());
  const double sx = static_cast<double>(img.width()) / width;
  const double sy = static_cast<double>(img.height()) / height;
  for (int c = 0; c < img.channels(); ++c) {
#pragma omp parallel for schedule(static)
    for (int y = 0; y < height; ++y) {
      const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, img.height() - 1.0);
      const int y0 = static_cast<int>(fy);
      const int y1 = std::min(y0 + 1, img.height() - 1);
      const double ty = fy - y0;
      for (int x = 0; x < width; ++x) {
        const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, img.width() - 1.0);
        const int x0 = static_cast<int>(fx);
        const int x1 = std::min(x0 + 1, img.width() - 1);
        const double tx = fx - x0;
        const double top = (1 - tx) * img.at(c, y0, x0) + tx * img.at(c, y0, x1);
        const double bot = (1 - tx) * img.at(c, y1, x0) + tx * img.at(c, y1, x1);
        out.at(c, y, x) = (1 - ty) * top + ty * bot;
      }
    }
  }
  return out;
}

double max_abs_diff(const ImageF& a, const ImageF& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

}  // namespace gpblend

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gpblend {

/// Floating-point image with planar channels. Plane c occupies
/// data()[c*w*h, (c+1)*w*h) in row-major order.
///
/// Values read from files are in [0,1]; solver intermediates may leave that
/// range and are only clamped when written out.
class ImageF {
 public:
  ImageF() = default;
  ImageF(int width, int height, int channels, double fill = 0.0);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  std::size_t plane_size() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }
  bool empty() const noexcept { return data_.empty(); }

  std::span<double> plane(int c) noexcept {
    return {data_.data() + c * plane_size(), plane_size()};
  }
  std::span<const double> plane(int c) const noexcept {
    return {data_.data() + c * plane_size(), plane_size()};
  }

  double& at(int c, int y, int x) noexcept {
    return data_[c * plane_size() + static_cast<std::size_t>(y) * width_ + x];
  }
  double at(int c, int y, int x) const noexcept {
    return data_[c * plane_size() + static_cast<std::size_t>(y) * width_ + x];
  }

  std::vector<double>& data() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

  bool same_shape(const ImageF& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }

  friend bool operator==(const ImageF&, const ImageF&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

/// Hard binary selector: every sample is exactly 0.0 or 1.0.
class MaskImage {
 public:
  MaskImage() = default;
  MaskImage(int width, int height, double fill = 0.0);

  /// Binarizes `values` (row-major, width*height) with `v > threshold`.
  static MaskImage from_values(int width, int height, std::span<const double> values,
                               double threshold = 0.5);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }

  bool selected(int y, int x) const noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x] != 0.0;
  }
  double at(int y, int x) const noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  void set(int y, int x, bool on) noexcept {
    data_[static_cast<std::size_t>(y) * width_ + x] = on ? 1.0 : 0.0;
  }

  std::span<const double> values() const noexcept { return data_; }

  std::size_t count_selected() const noexcept;

  /// The mask as a one-channel float image (used by the multi-band weights).
  ImageF as_image() const;

  friend bool operator==(const MaskImage&, const MaskImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

/// Throws DimensionMismatch unless the image and mask cover the same grid.
void require_same_dims(const ImageF& img, const MaskImage& mask, const char* what);
/// Throws DimensionMismatch unless both images have identical shape.
void require_same_shape(const ImageF& a, const ImageF& b, const char* what);

/// Copy-and-paste compositing: src where mask is set, dst elsewhere.
ImageF composite(const ImageF& src, const ImageF& dst, const MaskImage& mask);

/// Clamps every sample into [0,1].
ImageF clamp01(ImageF img);

/// Replicates a one-channel image into three channels; three-channel input
/// is returned unchanged.
ImageF to_rgb(ImageF img);

/// Rec. 601 luma for RGB, identity for one channel.
ImageF luminance(const ImageF& img);

/// Bilinear resampling with pixel-centre alignment and clamped borders.
ImageF resize_bilinear(const ImageF& img, int width, int height);

double max_abs_diff(const ImageF& a, const ImageF& b);
double mean(std::span<const double> values);

}  // namespace gpblend

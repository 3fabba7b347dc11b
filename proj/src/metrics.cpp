#include "gpblend/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gpblend/error.hpp"
#include "gpblend/gradient.hpp"
#include "gpblend/guide.hpp"

namespace gpblend {
namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(v.begin(), mid);
  return 0.5 * (lo + hi);
}

double channel_mean_abs(const ImageF& a, const ImageF& b, int y, int x) {
  double s = 0.0;
  for (int c = 0; c < a.channels(); ++c) s += std::abs(a.at(c, y, x) - b.at(c, y, x));
  return s / a.channels();
}

double safe_ratio(double num, double den) {
  if (num == 0.0) return 0.0;
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return num / den;
}

}  // namespace

double gradient_mse(const ImageF& blended, const ImageF& src, const ImageF& dst,
                    const MaskImage& mask) {
  require_same_shape(blended, src, "gradient_mse");
  const VectorField target = composite_field(src, dst, mask);
  const VectorField actual = gradients(blended);
  double s = 0.0;
  const auto& ax = actual.gx.data();
  const auto& ay = actual.gy.data();
  const auto& tx = target.gx.data();
  const auto& ty = target.gy.data();
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const double dx = ax[i] - tx[i];
    const double dy = ay[i] - ty[i];
    s += dx * dx + dy * dy;
  }
  return s / static_cast<double>(2 * ax.size());
}

double colour_mse(const ImageF& blended, const ImageF& guide) {
  if (blended.channels() != guide.channels())
    throw Error(ErrorKind::DimensionMismatch, "colour_mse: channel counts differ");
  const ImageF reduced = resize_bilinear(
      downsample_to(blended, std::max(guide.width(), guide.height())), guide.width(),
      guide.height());
  double s = 0.0;
  for (std::size_t i = 0; i < reduced.data().size(); ++i) {
    const double d = reduced.data()[i] - guide.data()[i];
    s += d * d;
  }
  return s / static_cast<double>(reduced.data().size());
}

double SeamProfile::ratio() const {
  return std::max(safe_ratio(worst_seam_row, median_row), safe_ratio(worst_seam_col, median_col));
}

SeamProfile seam_profile(const ImageF& img, const ImageF& src, const ImageF& dst,
                         const MaskImage& mask) {
  require_same_shape(img, src, "seam_profile");
  require_same_shape(img, dst, "seam_profile");
  require_same_dims(img, mask, "seam_profile");
  const int w = img.width(), h = img.height();
  const VectorField steps = gradients(img);
  const VectorField target = composite_field(src, dst, mask);
  const ImageF zero(w, h, img.channels());
  SeamProfile p;

  std::vector<double> rows;
  for (int y = 0; y + 1 < h; ++y) {
    double all = 0.0, seam = 0.0;
    int seam_count = 0;
    for (int x = 0; x < w; ++x) {
      all += channel_mean_abs(steps.gy, zero, y, x);
      if (mask.selected(y, x) != mask.selected(y + 1, x)) {
        seam += channel_mean_abs(steps.gy, target.gy, y, x);
        ++seam_count;
      }
    }
    rows.push_back(all / w);
    if (seam_count > 0) {
      p.has_seam = true;
      p.worst_seam_row = std::max(p.worst_seam_row, seam / seam_count);
    }
  }

  std::vector<double> cols;
  for (int x = 0; x + 1 < w; ++x) {
    double all = 0.0, seam = 0.0;
    int seam_count = 0;
    for (int y = 0; y < h; ++y) {
      all += channel_mean_abs(steps.gx, zero, y, x);
      if (mask.selected(y, x) != mask.selected(y, x + 1)) {
        seam += channel_mean_abs(steps.gx, target.gx, y, x);
        ++seam_count;
      }
    }
    cols.push_back(all / h);
    if (seam_count > 0) {
      p.has_seam = true;
      p.worst_seam_col = std::max(p.worst_seam_col, seam / seam_count);
    }
  }
  p.median_row = median(std::move(rows));
  p.median_col = median(std::move(cols));
  return p;
}

}  // namespace gpblend

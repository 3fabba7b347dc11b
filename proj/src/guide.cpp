#include "gpblend/guide.hpp"

#include <algorithm>
#include <string>

#include "gpblend/error.hpp"
#include "gpblend/png_io.hpp"
#include "gpblend/pyramid.hpp"

namespace gpblend {

void GuideSpec::validate() const {
  if (size < 8) throw Error(ErrorKind::InvalidArgument, "guide size must be at least 8");
  if (kind == GuideKind::File && path.empty())
    throw Error(ErrorKind::InvalidArgument, "file guide needs a path");
}

GuideSpec GuideSpec::parse(std::string_view text) {
  constexpr std::string_view kFilePrefix = "file:";
  GuideSpec spec;
  if (text == "downsample") return spec;
  if (text.starts_with(kFilePrefix) && text.size() > kFilePrefix.size()) {
    spec.kind = GuideKind::File;
    spec.path = std::string(text.substr(kFilePrefix.size()));
    return spec;
  }
  throw Error(ErrorKind::InvalidArgument,
              "guide must be 'downsample' or 'file:PATH', got '" + std::string(text) + "'");
}

ImageF downsample_to(const ImageF& img, int max_dim) {
  ImageF out = img;
  while (std::max(out.width(), out.height()) > max_dim) out = downsample(out);
  return out;
}

ImageF resolve_guide(const GuideSpec& spec, const ImageF& src, const ImageF& dst,
                     const MaskImage& mask) {
  spec.validate();
  if (spec.kind == GuideKind::Downsample)
    return downsample_to(composite(src, dst, mask), spec.size);

  ImageF guide = load_image(spec.path);
  if (guide.width() != spec.size || guide.height() != spec.size || guide.channels() != 3)
    throw Error(ErrorKind::GuideFileBadDims,
                "guide '" + spec.path.string() + "' is " + std::to_string(guide.width()) + "x" +
                    std::to_string(guide.height()) + "x" + std::to_string(guide.channels()) +
                    ", expected " + std::to_string(spec.size) + "x" +
                    std::to_string(spec.size) + "x3");
  return guide;
}

}  // namespace gpblend

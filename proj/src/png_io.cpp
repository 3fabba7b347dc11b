#include "gpblend/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "gpblend/error.hpp"

namespace gpblend {
namespace {

// Heap-held so nothing automatic is modified between setjmp and a libpng
// longjmp.
struct PngBuffers {
  std::string message;
  std::vector<unsigned char> pixels;
  std::vector<png_bytep> rows;
};

void on_png_error(png_structp png, png_const_charp msg) {
  auto* buffers = static_cast<PngBuffers*>(png_get_error_ptr(png));
  if (buffers != nullptr) buffers->message = msg;
  png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

struct FileCloser {
  void operator()(std::FILE* fp) const noexcept { std::fclose(fp); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr fp(std::fopen(path.c_str(), mode));
  if (!fp) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  return fp;
}

}  // namespace

unsigned char to_byte(double v) noexcept {
  const double c = std::clamp(v, 0.0, 1.0);
  return static_cast<unsigned char>(std::floor(c * 255.0 + 0.5));
}

ImageF load_image(const std::filesystem::path& path) {
  FilePtr fp = open_file(path, "rb");
  std::array<unsigned char, 8> sig{};
  if (std::fread(sig.data(), 1, sig.size(), fp.get()) != sig.size() ||
      png_sig_cmp(sig.data(), 0, sig.size()) != 0)
    throw Error(ErrorKind::UnsupportedFormat, "'" + path.string() + "' is not a PNG file");

  auto buffers = std::make_unique<PngBuffers>();
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, buffers.get(),
                                           on_png_error, on_png_warning);
  if (png == nullptr) throw Error(ErrorKind::IoError, "libpng initialization failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw Error(ErrorKind::IoError, "libpng initialization failed");
  }

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(ErrorKind::UnsupportedFormat,
                "cannot decode '" + path.string() + "': " + buffers->message);
  }

  png_init_io(png, fp.get());
  png_set_sig_bytes(png, static_cast<int>(sig.size()));
  png_read_info(png, info);

  png_set_expand(png);
  png_set_strip_alpha(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int channels = png_get_channels(png, info);
  const int depth = png_get_bit_depth(png, info);
  if ((channels != 1 && channels != 3) || (depth != 8 && depth != 16)) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(ErrorKind::UnsupportedFormat,
                "'" + path.string() + "' has an unsupported pixel layout");
  }

  const std::size_t row_bytes = png_get_rowbytes(png, info);
  buffers->pixels.resize(row_bytes * height);
  buffers->rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y)
    buffers->rows[y] = buffers->pixels.data() + y * row_bytes;
  png_read_image(png, buffers->rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  ImageF img(static_cast<int>(width), static_cast<int>(height), channels);
  const double scale = depth == 16 ? 65535.0 : 255.0;
  for (png_uint_32 y = 0; y < height; ++y) {
    const unsigned char* row = buffers->rows[y];
    for (png_uint_32 x = 0; x < width; ++x) {
      for (int c = 0; c < channels; ++c) {
        const std::size_t k = static_cast<std::size_t>(x) * channels + c;
        const unsigned sample = depth == 16 ? (unsigned{row[2 * k]} << 8) | row[2 * k + 1]
                                            : unsigned{row[k]};
        img.at(c, static_cast<int>(y), static_cast<int>(x)) = sample / scale;
      }
    }
  }
  return img;
}

void save_image(const ImageF& img, const std::filesystem::path& path) {
  if (img.empty()) throw Error(ErrorKind::InvalidArgument, "cannot save an empty image");
  auto buffers = std::make_unique<PngBuffers>();
  const int channels = img.channels();
  const std::size_t row_bytes = static_cast<std::size_t>(img.width()) * channels;
  buffers->pixels.resize(row_bytes * img.height());
  buffers->rows.resize(img.height());
  for (int y = 0; y < img.height(); ++y) {
    buffers->rows[y] = buffers->pixels.data() + y * row_bytes;
    for (int x = 0; x < img.width(); ++x)
      for (int c = 0; c < channels; ++c)
        buffers->rows[y][static_cast<std::size_t>(x) * channels + c] = to_byte(img.at(c, y, x));
  }

  FilePtr fp = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, buffers.get(),
                                            on_png_error, on_png_warning);
  if (png == nullptr) throw Error(ErrorKind::IoError, "libpng initialization failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(ErrorKind::IoError, "libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorKind::IoError,
                "cannot write '" + path.string() + "': " + buffers->message);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
               static_cast<png_uint_32>(img.height()), 8,
               channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, buffers->rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  if (std::fflush(fp.get()) != 0)
    throw Error(ErrorKind::IoError, "cannot flush '" + path.string() + "'");
}

MaskImage load_mask(const std::filesystem::path& path, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "mask threshold must lie in [0,1]");
  const ImageF luma = luminance(load_image(path));
  return MaskImage::from_values(luma.width(), luma.height(), luma.plane(0), threshold);
}

void save_mask(const MaskImage& mask, const std::filesystem::path& path) {
  save_image(mask.as_image(), path);
}

}  // namespace gpblend

#include <doctest.h>

#include <vector>

#include "gpblend/error.hpp"
#include "gpblend/image.hpp"
#include "support/random_images.hpp"

using namespace gpblend;
using gpblend::testing::left_mask;
using gpblend::testing::random_image;
using gpblend::testing::random_mask;

TEST_CASE("ImageF rejects invalid shapes") {
  CHECK_THROWS_AS(ImageF(0, 4, 1), Error);
  CHECK_THROWS_AS(ImageF(4, 0, 3), Error);
  CHECK_THROWS_AS(ImageF(4, 4, 2), Error);
  const ImageF img(5, 3, 3, 0.25);
  CHECK(img.plane(2).size() == 15);
  CHECK(img.data().size() == 45);
}

TEST_CASE("composite with a full or empty mask returns one input") {
  const ImageF src(6, 5, 3, 0.2), dst(6, 5, 3, 0.8);
  const ImageF all_src = composite(src, dst, MaskImage(6, 5, 1.0));
  const ImageF all_dst = composite(src, dst, MaskImage(6, 5, 0.0));
  for (double v : all_src.data()) CHECK(v == 0.2);
  for (double v : all_dst.data()) CHECK(v == 0.8);
}

TEST_CASE("composite selects pixel by pixel") {
  const ImageF src = random_image(4, 4, 3, 1), dst = random_image(4, 4, 3, 2);
  const MaskImage mask = left_mask(4, 4, 2);
  const ImageF out = composite(src, dst, mask);
  for (int c = 0; c < 3; ++c)
    for (int y = 0; y < 4; ++y)
      for (int x = 0; x < 4; ++x)
        CHECK(out.at(c, y, x) == (x < 2 ? src.at(c, y, x) : dst.at(c, y, x)));
}

TEST_CASE("composite properties on random inputs") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    const ImageF src = random_image(9, 7, 3, seed), dst = random_image(9, 7, 3, seed + 100);
    const MaskImage mask = random_mask(9, 7, seed + 200);
    const ImageF once = composite(src, dst, mask);
    CHECK(composite(once, dst, mask) == once);
    CHECK(composite(src, src, mask) == src);
    for (std::size_t i = 0; i < once.data().size(); ++i)
      CHECK((once.data()[i] == src.data()[i] || once.data()[i] == dst.data()[i]));
  }
}

TEST_CASE("composite reports dimension mismatches") {
  const ImageF a(4, 4, 3), b(4, 5, 3), gray(4, 4, 1);
  try {
    composite(a, b, MaskImage(4, 4));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  CHECK_THROWS_AS(composite(a, gray, MaskImage(4, 4)), Error);
  CHECK_THROWS_AS(composite(a, a, MaskImage(5, 4)), Error);
}

TEST_CASE("MaskImage binarizes with a strict threshold") {
  const std::vector<double> values = {0.0, 0.5, 0.51, 1.0};
  const MaskImage m = MaskImage::from_values(2, 2, values, 0.5);
  CHECK(m.at(0, 0) == 0.0);
  CHECK(m.at(0, 1) == 0.0);
  CHECK(m.at(1, 0) == 1.0);
  CHECK(m.at(1, 1) == 1.0);
  CHECK(m.count_selected() == 2);
  CHECK_THROWS_AS(MaskImage::from_values(3, 2, values, 0.5), Error);
}

TEST_CASE("colour helpers") {
  ImageF gray(2, 1, 1);
  gray.at(0, 0, 0) = 0.3;
  gray.at(0, 0, 1) = 0.9;
  const ImageF rgb = to_rgb(gray);
  REQUIRE(rgb.channels() == 3);
  for (int c = 0; c < 3; ++c) CHECK(rgb.at(c, 0, 1) == 0.9);
  CHECK(luminance(rgb).at(0, 0, 0) == doctest::Approx(0.3).epsilon(1e-12));

  ImageF wild(2, 2, 1);
  wild.data() = {-0.5, 0.25, 1.0, 3.0};
  CHECK(clamp01(wild).data() == std::vector<double>{0.0, 0.25, 1.0, 1.0});
}

TEST_CASE("resize_bilinear preserves constants and identity size") {
  const ImageF c(7, 5, 3, 0.4);
  const ImageF r = resize_bilinear(c, 13, 3);
  CHECK(r.width() == 13);
  CHECK(r.height() == 3);
  for (double v : r.data()) CHECK(v == doctest::Approx(0.4).epsilon(1e-15));
  const ImageF img = random_image(6, 4, 1, 3);
  CHECK(max_abs_diff(resize_bilinear(img, 6, 4), img) <= 1e-15);
}

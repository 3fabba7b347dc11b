#include <doctest.h>

#include <cmath>

#include "gpblend/dirichlet.hpp"
#include "gpblend/error.hpp"
#include "gpblend/gradient.hpp"
#include "support/oracles.hpp"
#include "support/random_images.hpp"

using namespace gpblend;
using gpblend::testing::dense_dirichlet_solve;
using gpblend::testing::random_image;
using gpblend::testing::random_mask;
using gpblend::testing::relative_l2;

namespace {

MaskImage square_mask(int w, int h, int x0, int y0, int side) {
  MaskImage m(w, h);
  for (int y = y0; y < y0 + side; ++y)
    for (int x = x0; x < x0 + side; ++x) m.set(y, x, true);
  return m;
}

double interior_residual(const ImageF& x, const ImageF& u, const MaskImage& mask, int c) {
  const ImageF lx = laplacian(x);
  double s = 0.0;
  for (int y = 0; y < x.height(); ++y)
    for (int xx = 0; xx < x.width(); ++xx)
      if (mask.selected(y, xx)) {
        const double d = lx.at(c, y, xx) - u.at(c, y, xx);
        s += d * d;
      }
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("the Laplacian of dst reproduces dst") {
  const ImageF dst = random_image(20, 14, 3, 300);
  const MaskImage mask = square_mask(20, 14, 4, 3, 8);
  const DirichletResult r = solve_poisson_dirichlet(laplacian(dst), dst, mask);
  CHECK(r.converged);
  CHECK(max_abs_diff(r.image, dst) <= 1e-6);
}

TEST_CASE("an empty mask returns dst exactly") {
  const ImageF dst = random_image(9, 9, 3, 301);
  const DirichletResult r =
      solve_poisson_dirichlet(random_image(9, 9, 3, 302), dst, MaskImage(9, 9, 0.0));
  CHECK(r.image == dst);
  CHECK(r.converged);
}

TEST_CASE("an interior square matches the dense solve") {
  for (unsigned seed = 0; seed < 5; ++seed) {
    const ImageF u = random_image(8, 8, 1, 310 + seed, -1.0, 1.0);
    const ImageF dst = random_image(8, 8, 1, 320 + seed);
    const MaskImage mask = square_mask(8, 8, 2, 2, 4);
    const DirichletResult r = solve_poisson_dirichlet(u, dst, mask);
    CHECK(relative_l2(r.image, dense_dirichlet_solve(u, dst, mask)) <= 1e-6);
  }
}

TEST_CASE("irregular masks that touch the border match the dense solve") {
  for (unsigned seed = 0; seed < 5; ++seed) {
    const ImageF u = random_image(16, 16, 1, 330 + seed, -1.0, 1.0);
    const ImageF dst = random_image(16, 16, 1, 340 + seed);
    const MaskImage mask = random_mask(16, 16, 350 + seed, 0.7);
    const DirichletResult r = solve_poisson_dirichlet(u, dst, mask, 1e-12, 10000);
    CHECK(r.converged);
    CHECK(relative_l2(r.image, dense_dirichlet_solve(u, dst, mask)) <= 1e-9);
  }
}

TEST_CASE("boundary values are bit-identical and the residual meets tol") {
  const ImageF u = random_image(24, 18, 3, 360, -1.0, 1.0);
  const ImageF dst = random_image(24, 18, 3, 361);
  const MaskImage mask = random_mask(24, 18, 362, 0.6);
  const double tol = 1e-8;
  const DirichletResult r = solve_poisson_dirichlet(u, dst, mask, tol, 5000);
  REQUIRE(r.converged);
  CHECK(r.residual <= tol);
  for (int c = 0; c < 3; ++c) {
    CHECK(interior_residual(r.image, u, mask, c) <= tol);
    for (int y = 0; y < 18; ++y)
      for (int x = 0; x < 24; ++x)
        if (!mask.selected(y, x)) CHECK(r.image.at(c, y, x) == dst.at(c, y, x));
  }
}

TEST_CASE("stopping early returns the best iterate with a warning flag") {
  const ImageF u = random_image(32, 32, 1, 370, -1.0, 1.0);
  const ImageF dst = random_image(32, 32, 1, 371);
  const MaskImage mask = square_mask(32, 32, 4, 4, 24);
  const DirichletResult start = solve_poisson_dirichlet(u, dst, mask, 1e-12, 1);
  const DirichletResult more = solve_poisson_dirichlet(u, dst, mask, 1e-12, 5);
  CHECK_FALSE(start.converged);
  CHECK_FALSE(more.converged);
  CHECK(more.residual <= start.residual);
  CHECK(interior_residual(more.image, u, mask, 0) == doctest::Approx(more.residual).epsilon(1e-6));
}

TEST_CASE("invalid Dirichlet problems are rejected") {
  const ImageF img(6, 6, 1);
  try {
    solve_poisson_dirichlet(img, img, MaskImage(6, 6, 1.0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoExterior);
  }
  CHECK_THROWS_AS(solve_poisson_dirichlet(img, img, MaskImage(6, 6), 0.0, 10), Error);
  CHECK_THROWS_AS(solve_poisson_dirichlet(img, img, MaskImage(6, 6), 1e-6, 0), Error);
  CHECK_THROWS_AS(solve_poisson_dirichlet(img, img, MaskImage(6, 7)), Error);
}

#pragma once

#include "gpblend/image.hpp"

namespace gpblend {

struct DirichletResult {
  ImageF image;
  /// False when some channel hit max_iter; `image` then holds the best
  /// iterate seen.
  bool converged = true;
  int iterations = 0;
  /// Largest final residual L2 norm over channels.
  double residual = 0.0;
};

/// Solves laplacian(x) == u on mask pixels with x fixed to dst elsewhere,
/// by unpreconditioned conjugate gradient per channel. `tol` bounds the
/// residual L2 norm of each channel; the circular 5-point stencil is used so
/// that u = laplacian(dst) reproduces dst.
DirichletResult solve_poisson_dirichlet(const ImageF& u, const ImageF& dst,
                                        const MaskImage& mask, double tol, int max_iter);

/// Same with tol = 1e-6 * ||rhs|| and max_iter = 10 * unknowns per channel.
DirichletResult solve_poisson_dirichlet(const ImageF& u, const ImageF& dst,
                                        const MaskImage& mask);

}  // namespace gpblend

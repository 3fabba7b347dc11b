#include "gpblend/dirichlet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "gpblend/error.hpp"

namespace gpblend {
namespace {

// Partial sums over fixed blocks, combined serially: the result does not
// depend on the OpenMP team size.
constexpr std::ptrdiff_t kDotBlock = 1024;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  const std::ptrdiff_t blocks = (n + kDotBlock - 1) / kDotBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < blocks; ++blk) {
    const std::ptrdiff_t end = std::min(n, (blk + 1) * kDotBlock);
    double s = 0.0;
    for (std::ptrdiff_t i = blk * kDotBlock; i < end; ++i) s += a[i] * b[i];
    partial[blk] = s;
  }
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

// Masked 5-point system on the torus. Row k stands for unknown pixel
// pixel[k]: 4 x_k - sum(unknown neighbours) = sum(known neighbours) - u_k.
struct MaskedSystem {
  std::vector<std::size_t> pixel;
  // -1 marks a neighbour fixed by dst.
  std::vector<std::array<std::ptrdiff_t, 4>> neighbour;
  std::vector<std::array<std::size_t, 4>> neighbour_pixel;

  std::size_t size() const noexcept { return pixel.size(); }

  void apply(const std::vector<double>& x, std::vector<double>& out) const {
    const auto n = static_cast<std::ptrdiff_t>(size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      double v = 4.0 * x[k];
      for (const std::ptrdiff_t j : neighbour[k])
        if (j >= 0) v -= x[j];
      out[k] = v;
    }
  }
};

MaskedSystem build_system(const MaskImage& mask) {
  const int w = mask.width(), h = mask.height();
  std::vector<std::ptrdiff_t> index(static_cast<std::size_t>(w) * h, -1);
  MaskedSystem sys;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (mask.selected(y, x)) {
        const std::size_t p = static_cast<std::size_t>(y) * w + x;
        index[p] = static_cast<std::ptrdiff_t>(sys.pixel.size());
        sys.pixel.push_back(p);
      }
  sys.neighbour.resize(sys.size());
  sys.neighbour_pixel.resize(sys.size());
  for (std::size_t k = 0; k < sys.size(); ++k) {
    const int y = static_cast<int>(sys.pixel[k] / w);
    const int x = static_cast<int>(sys.pixel[k] % w);
    const std::array<std::size_t, 4> nb = {
        static_cast<std::size_t>((y + h - 1) % h) * w + x,
        static_cast<std::size_t>((y + 1) % h) * w + x,
        static_cast<std::size_t>(y) * w + (x + w - 1) % w,
        static_cast<std::size_t>(y) * w + (x + 1) % w,
    };
    for (int d = 0; d < 4; ++d) {
      sys.neighbour_pixel[k][d] = nb[d];
      sys.neighbour[k][d] = index[nb[d]];
    }
  }
  return sys;
}

struct ChannelSolve {
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;
};

ChannelSolve conjugate_gradient(const MaskedSystem& sys, const std::vector<double>& rhs,
                                std::vector<double>& x, double tol, int max_iter) {
  const std::size_t n = sys.size();
  std::vector<double> r(n), p(n), ap(n);
  sys.apply(x, ap);
  for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - ap[i];
  p = r;
  double rr = dot(r, r);

  std::vector<double> best = x;
  double best_norm = std::sqrt(rr);
  ChannelSolve result;
  if (best_norm <= tol) {
    result.converged = true;
    result.residual = best_norm;
    return result;
  }

  for (int it = 1; it <= max_iter; ++it) {
    sys.apply(p, ap);
    const double pap = dot(p, ap);
    if (!(pap > 0.0)) break;
    const double alpha = rr / pap;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    const double rr_next = dot(r, r);
    const double norm = std::sqrt(rr_next);
    result.iterations = it;
    if (norm < best_norm) {
      best_norm = norm;
      best = x;
    }
    if (norm <= tol) {
      result.converged = true;
      break;
    }
    const double ratio = rr_next / rr;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + ratio * p[i];
    rr = rr_next;
  }
  if (!result.converged) x = best;
  result.residual = best_norm;
  return result;
}

DirichletResult solve(const ImageF& u, const ImageF& dst, const MaskImage& mask,
                      double tol, double rel_tol, int max_iter) {
  require_same_shape(u, dst, "solve_poisson_dirichlet");
  require_same_dims(dst, mask, "solve_poisson_dirichlet");
  if (mask.count_selected() == mask.size())
    throw Error(ErrorKind::NoExterior, "mask has no exterior pixels to fix the boundary");

  DirichletResult result{dst, true, 0, 0.0};
  const MaskedSystem sys = build_system(mask);
  const std::size_t n = sys.size();
  if (n == 0) return result;

  for (int c = 0; c < dst.channels(); ++c) {
    const auto pu = u.plane(c);
    const auto pd = dst.plane(c);
    std::vector<double> rhs(n), x(n);
    for (std::size_t k = 0; k < n; ++k) {
      double b = -pu[sys.pixel[k]];
      for (int d = 0; d < 4; ++d)
        if (sys.neighbour[k][d] < 0) b += pd[sys.neighbour_pixel[k][d]];
      rhs[k] = b;
      x[k] = pd[sys.pixel[k]];
    }
    // The floor keeps a zero right-hand side from demanding an exact zero residual.
    const double channel_tol =
        rel_tol > 0.0 ? std::max(rel_tol * std::sqrt(dot(rhs, rhs)), 1e-14) : tol;
    const int channel_iter = max_iter > 0 ? max_iter : static_cast<int>(10 * n);
    const ChannelSolve cs = conjugate_gradient(sys, rhs, x, channel_tol, channel_iter);

    auto out = result.image.plane(c);
    for (std::size_t k = 0; k < n; ++k) out[sys.pixel[k]] = x[k];
    result.converged = result.converged && cs.converged;
    result.iterations = std::max(result.iterations, cs.iterations);
    result.residual = std::max(result.residual, cs.residual);
  }
  return result;
}

}  // namespace

DirichletResult solve_poisson_dirichlet(const ImageF& u, const ImageF& dst,
                                        const MaskImage& mask, double tol, int max_iter) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be positive");
  if (max_iter < 1) throw Error(ErrorKind::InvalidArgument, "max_iter must be positive");
  return solve(u, dst, mask, tol, 0.0, max_iter);
}

DirichletResult solve_poisson_dirichlet(const ImageF& u, const ImageF& dst,
                                        const MaskImage& mask) {
  return solve(u, dst, mask, 0.0, 1e-6, 0);
}

}  // namespace gpblend

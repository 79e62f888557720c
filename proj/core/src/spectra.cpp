#include "einstab/spectra.hpp"

#include <cmath>
#include <random>

#include "einstab/eigensolver.hpp"
#include "einstab/errors.hpp"
#include "einstab/operators.hpp"

namespace einstab {

namespace {

double plane_curvature(const Curv4& r, const std::vector<double>& x,
                       const std::vector<double>& y) {
  const int n = r.dim;
  double s = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double xy = x[static_cast<size_t>(a)] * y[static_cast<size_t>(b)];
      if (xy == 0.0) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          s += r(a, b, c, d) * xy * y[static_cast<size_t>(c)] * x[static_cast<size_t>(d)];
    }
  return s;
}

// Gradient of K with respect to the frame vectors, before projection.
void plane_gradient(const Curv4& r, const std::vector<double>& x,
                    const std::vector<double>& y, std::vector<double>& gx,
                    std::vector<double>& gy) {
  const int n = r.dim;
  // K = X^T A X with A_ad = sum_bc R_abcd Y_b Y_c, and Y^T B Y likewise.
  DMatrix a(n, n), b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double sa = 0.0, sb = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          sa += r(i, p, q, j) * y[static_cast<size_t>(p)] * y[static_cast<size_t>(q)];
          sb += r(p, i, j, q) * x[static_cast<size_t>(p)] * x[static_cast<size_t>(q)];
        }
      a(i, j) = sa;
      b(i, j) = sb;
    }
  gx.assign(static_cast<size_t>(n), 0.0);
  gy.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gx[static_cast<size_t>(i)] += (a(i, j) + a(j, i)) * x[static_cast<size_t>(j)];
      gy[static_cast<size_t>(i)] += (b(i, j) + b(j, i)) * y[static_cast<size_t>(j)];
    }
}

void orthonormalize_pair(std::vector<double>& x, std::vector<double>& y) {
  const double nx = norm(x);
  for (double& c : x) c /= nx;
  const double proj = dot(y, x);
  for (size_t i = 0; i < y.size(); ++i) y[i] -= proj * x[i];
  const double ny = norm(y);
  for (double& c : y) c /= ny;
}

// 50 projected gradient steps from the given frame; direction +1 seeks the
// maximum, -1 the minimum.  Returns the best value seen.
double refine_plane(const Curv4& r, std::vector<double> x, std::vector<double> y,
                    double direction) {
  const int steps = 50;
  double best = plane_curvature(r, x, y);
  double alpha = 0.1;
  std::vector<double> gx, gy;
  for (int s = 0; s < steps; ++s) {
    plane_gradient(r, x, y, gx, gy);
    // Tangent projection: drop the components along the frame itself.
    const double gxx = dot(gx, x), gxy = dot(gx, y);
    const double gyx = dot(gy, x), gyy = dot(gy, y);
    for (size_t i = 0; i < x.size(); ++i) {
      gx[i] -= gxx * x[i] + gxy * y[i];
      gy[i] -= gyx * x[i] + gyy * y[i];
    }
    std::vector<double> nx = x, ny = y;
    for (size_t i = 0; i < x.size(); ++i) {
      nx[i] += direction * alpha * gx[i];
      ny[i] += direction * alpha * gy[i];
    }
    orthonormalize_pair(nx, ny);
    const double val = plane_curvature(r, nx, ny);
    if (direction * (val - best) > 0.0) {
      best = val;
      x = nx;
      y = ny;
      alpha *= 1.2;
    } else {
      alpha *= 0.5;
      if (alpha < 1e-12) break;
    }
  }
  return best;
}

}  // namespace

std::pair<double, double> sectional_range(const ManifoldModel& m, int samples,
                                          std::uint64_t seed) {
  if (samples < 100) throw input_error("sectional_range: need at least 100 samples");
  const int n = m.dim;
  const Curv4& r = m.curvature;

  std::vector<std::pair<std::vector<double>, std::vector<double>>> starts;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<double> x(static_cast<size_t>(n), 0.0), y(static_cast<size_t>(n), 0.0);
      x[static_cast<size_t>(i)] = 1.0;
      y[static_cast<size_t>(j)] = 1.0;
      starts.emplace_back(x, y);
    }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    std::vector<double> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
    for (double& c : x) c = gauss(rng);
    for (double& c : y) c = gauss(rng);
    orthonormalize_pair(x, y);
    starts.emplace_back(std::move(x), std::move(y));
  }

  double lo = plane_curvature(r, starts[0].first, starts[0].second);
  double hi = lo;
  for (const auto& [x, y] : starts) {
    hi = std::max(hi, refine_plane(r, x, y, +1.0));
    lo = std::min(lo, refine_plane(r, x, y, -1.0));
  }
  return {lo, hi};
}

SpectralSummary eigen_functions(const ManifoldModel& m, int sectional_samples,
                                std::uint64_t seed) {
  require_valid(m);
  const int n = m.dim;

  SpectralSummary out;
  const Sym2Operator full = sym2_operator(m.curvature);
  const DMatrix q = traceless_sym2_basis(n);
  out.r_sup = top_eigenvalue(congruence(full.matrix, q));

  const CurvatureDecomposition dec = curvature_decompose(m.curvature);
  out.w_sup = top_eigenvalue(sym2_operator(dec.weyl).matrix);
  out.w_lq = out.w_sup * std::pow(m.volume, 2.0 / n);

  const auto [lo, hi] = sectional_range(m, sectional_samples, seed);
  out.sectional_min = lo;
  out.sectional_max = hi;
  return out;
}

}  // namespace einstab

#include "einstab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "einstab/errors.hpp"

namespace einstab {

namespace {

constexpr double kOffDiagStop = 1e-14;  // on the normalized matrix
constexpr int kMaxSweeps = 100;

double max_off_diagonal(const DMatrix& a) {
  double m = 0.0;
  for (int p = 0; p < a.rows; ++p)
    for (int q = p + 1; q < a.cols; ++q) m = std::max(m, std::fabs(a(p, q)));
  return m;
}

}  // namespace

EigenResult symmetric_eigen(const DMatrix& a, bool want_vectors) {
  if (a.rows != a.cols) throw input_error("symmetric_eigen: matrix is not square");
  const int n = a.rows;
  const double scale = a.max_abs();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(a(i, j) - a(j, i)) > 1e-10 * std::max(1.0, scale))
        throw input_error("symmetric_eigen: matrix is not symmetric");

  // Work on the symmetrized copy; the stopping threshold is 1e-14 relative
  // to the largest entry, so behaviour is invariant under overall scaling.
  DMatrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = 0.5 * (a(i, j) + a(j, i));
  const double stop = kOffDiagStop * scale;

  DMatrix q = DMatrix::identity(n);

  int sweep = 0;
  while (max_off_diagonal(w) > stop) {
    if (++sweep > kMaxSweeps)
      throw numeric_error("symmetric_eigen: Jacobi sweeps did not converge");
    for (int p = 0; p < n - 1; ++p)
      for (int r = p + 1; r < n; ++r) {
        const double apq = w(p, r);
        if (std::fabs(apq) <= stop) continue;
        const double theta = (w(r, r) - w(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                             : -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double wpp = w(p, p);
        const double wrr = w(r, r);
        w(p, p) = wpp - t * apq;
        w(r, r) = wrr + t * apq;
        w(p, r) = 0.0;
        w(r, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == r) continue;
          const double wkp = w(k, p);
          const double wkr = w(k, r);
          w(k, p) = wkp - s * (wkr + tau * wkp);
          w(p, k) = w(k, p);
          w(k, r) = wkr + s * (wkp - tau * wkr);
          w(r, k) = w(k, r);
        }
        for (int k = 0; k < n; ++k) {
          const double qkp = q(k, p);
          const double qkr = q(k, r);
          q(k, p) = qkp - s * (qkr + tau * qkp);
          q(k, r) = qkr + s * (qkp - tau * qkr);
        }
      }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&w](int i, int j) { return w(i, i) < w(j, j); });

  EigenResult res;
  res.values.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    res.values[static_cast<size_t>(k)] =
        w(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]);
  if (want_vectors) {
    res.vectors = DMatrix(n, n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) res.vectors(i, k) = q(i, order[static_cast<size_t>(k)]);
  }
  return res;
}

double top_eigenvalue(const DMatrix& a) { return symmetric_eigen(a).values.back(); }

}  // namespace einstab

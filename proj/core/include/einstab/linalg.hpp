#ifndef EINSTAB_LINALG_HPP
#define EINSTAB_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace einstab {

/// Small dense row-major matrix.  Everything here runs at desk scale
/// (fibers of symmetric 2-tensors and 2-forms, so at most ~40x40).
struct DMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  DMatrix() = default;
  DMatrix(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }

  static DMatrix identity(int n) {
    DMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
  }
};

inline DMatrix matmul(const DMatrix& a, const DMatrix& b) {
  DMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline DMatrix transpose(const DMatrix& a) {
  DMatrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

/// qᵀ a q for a square and q rectangular (rows of q match a).
inline DMatrix congruence(const DMatrix& a, const DMatrix& q) {
  return matmul(transpose(q), matmul(a, q));
}

inline std::vector<double> matvec(const DMatrix& a, const std::vector<double>& x) {
  std::vector<double> y(static_cast<size_t>(a.rows), 0.0);
  for (int i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = s;
  }
  return y;
}

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

}  // namespace einstab

#endif

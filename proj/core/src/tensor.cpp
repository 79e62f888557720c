#include "einstab/tensor.hpp"

#include <cmath>
#include <cstdio>

#include "einstab/errors.hpp"

namespace einstab {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kBianchiTol = 1e-10;

void require_same_dim(int a, int b, const char* op) {
  if (a != b) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s: dimension mismatch (%d vs %d)", op, a, b);
    throw input_error(buf);
  }
}

}  // namespace

double Sym2::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double Sym2::symmetry_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      r = std::max(r, std::fabs((*this)(i, j) - (*this)(j, i)));
  return r;
}

double AntiSym2::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double AntiSym2::antisymmetry_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      r = std::max(r, std::fabs((*this)(i, j) + (*this)(j, i)));
  return r;
}

double Curv4::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

Curv4& Curv4::operator+=(const Curv4& o) {
  require_same_dim(dim, o.dim, "Curv4 sum");
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
  return *this;
}

Curv4& Curv4::operator-=(const Curv4& o) {
  require_same_dim(dim, o.dim, "Curv4 difference");
  for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
  return *this;
}

Curv4& Curv4::operator*=(double c) {
  for (double& x : v) x *= c;
  return *this;
}

Curv4 operator+(Curv4 a, const Curv4& b) { return a += b; }
Curv4 operator-(Curv4 a, const Curv4& b) { return a -= b; }
Curv4 operator*(double c, Curv4 a) { return a *= c; }

double CurvatureResiduals::max_symmetry() const {
  return std::max(antisym_first, std::max(antisym_second, pair));
}

CurvatureResiduals curvature_residuals(const Curv4& t, bool with_bianchi) {
  const int n = t.dim;
  CurvatureResiduals r;
  auto track = [&r](double res, int i, int j, int k, int l, double& slot) {
    res = std::fabs(res);
    if (res > slot) slot = res;
    if (res > r.worst_value) {
      r.worst_value = res;
      r.worst_index[0] = i;
      r.worst_index[1] = j;
      r.worst_index[2] = k;
      r.worst_index[3] = l;
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double x = t(i, j, k, l);
          track(x + t(j, i, k, l), i, j, k, l, r.antisym_first);
          track(x + t(i, j, l, k), i, j, k, l, r.antisym_second);
          track(x - t(k, l, i, j), i, j, k, l, r.pair);
          if (with_bianchi)
            track(x + t(j, k, i, l) + t(k, i, j, l), i, j, k, l, r.bianchi);
        }
  return r;
}

void validate_curvature(const Curv4& t, bool with_bianchi, const std::string& what) {
  const CurvatureResiduals r = curvature_residuals(t, with_bianchi);
  const double sym = r.max_symmetry();
  if (sym > kSymmetryTol || (with_bianchi && r.bianchi > kBianchiTol)) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%s violates curvature symmetries: worst residual %.3e at "
                  "component (%d,%d,%d,%d) [antisym %.3e/%.3e, pair %.3e, bianchi %.3e]",
                  what.c_str(), r.worst_value, r.worst_index[0], r.worst_index[1],
                  r.worst_index[2], r.worst_index[3], r.antisym_first,
                  r.antisym_second, r.pair, r.bianchi);
    throw input_error(buf);
  }
}

Curv4 kn_components(int n, const std::vector<double>& a, const std::vector<double>& b) {
  Curv4 t(n);
  auto A = [&](int i, int j) { return a[static_cast<size_t>(i) * n + j]; };
  auto B = [&](int i, int j) { return b[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          t(i, j, k, l) =
              A(i, l) * B(j, k) + A(j, k) * B(i, l) - A(i, k) * B(j, l) - A(j, l) * B(i, k);
  return t;
}

Curv4 kulkarni_nomizu(const Sym2& h, const Sym2& k) {
  require_same_dim(h.dim, k.dim, "kulkarni_nomizu");
  return kn_components(h.dim, h.v, k.v);
}

Curv4 pair_product(const AntiSym2& x, const AntiSym2& y) {
  require_same_dim(x.dim, y.dim, "pair_product");
  const int n = x.dim;
  Curv4 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double xij = x(i, j);
      if (xij == 0.0) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) t(i, j, k, l) = xij * y(k, l);
    }
  return t;
}

Contraction contract(const Curv4& t) {
  validate_curvature(t, /*with_bianchi=*/false, "contract input");
  const int n = t.dim;
  Contraction c;
  c.ric = Sym2(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += t(i, j, k, i);
      c.ric(j, k) = s;
    }
  c.scal = c.ric.trace();
  c.norm_sq = t.norm_sq();
  return c;
}

CurvatureDecomposition curvature_decompose(const Curv4& t) {
  const int n = t.dim;
  if (n < 3) throw input_error("curvature_decompose: unsupported dimension, need n >= 3");
  const Contraction c = contract(t);
  const Sym2 g = Sym2::metric(n);

  CurvatureDecomposition d;
  d.scalar_part = (c.scal / (2.0 * n * (n - 1))) * kulkarni_nomizu(g, g);

  Sym2 ric0(n);
  const double mean = c.scal / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ric0(i, j) = c.ric(i, j) - (i == j ? mean : 0.0);
  d.traceless_ricci = (1.0 / (n - 2)) * kulkarni_nomizu(ric0, g);

  d.weyl = t - d.scalar_part - d.traceless_ricci;
  return d;
}

}  // namespace einstab

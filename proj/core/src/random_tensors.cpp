#include "einstab/random_tensors.hpp"

#include <cmath>

#include "einstab/errors.hpp"
#include "einstab/kahler.hpp"
#include "einstab/model.hpp"

namespace einstab {

namespace {

// Pullback by J on the first index pair.
Curv4 pull_first_pair(const Curv4& t, const DMatrix& j) {
  const int n = t.dim;
  Curv4 out(n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int p = 0; p < n; ++p) {
            if (j(p, i) == 0.0) continue;
            for (int q = 0; q < n; ++q) {
              if (j(q, jj) == 0.0) continue;
              s += j(p, i) * j(q, jj) * t(p, q, k, l);
            }
          }
          out(i, jj, k, l) = s;
        }
  return out;
}

Curv4 pull_second_pair(const Curv4& t, const DMatrix& j) {
  const int n = t.dim;
  Curv4 out(n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int p = 0; p < n; ++p) {
            if (j(p, k) == 0.0) continue;
            for (int q = 0; q < n; ++q) {
              if (j(q, l) == 0.0) continue;
              s += j(p, k) * j(q, l) * t(i, jj, p, q);
            }
          }
          out(i, jj, k, l) = s;
        }
  return out;
}

double kahler_symmetry_residual(const Curv4& t, const DMatrix& j) {
  const Curv4 pulled = pull_first_pair(t, j);
  double r = 0.0;
  for (size_t i = 0; i < t.v.size(); ++i)
    r = std::max(r, std::fabs(pulled.v[i] - t.v[i]));
  return r;
}

}  // namespace

Sym2 random_sym2(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Sym2 h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) h(i, j) = h(j, i) = gauss(rng);
  return h;
}

Sym2 random_traceless_sym2(int n, Rng& rng) {
  Sym2 h = random_sym2(n, rng);
  const double mean = h.trace() / n;
  for (int i = 0; i < n; ++i) h(i, i) -= mean;
  return h;
}

Curv4 symmetrize_pairs(const Curv4& t) {
  const int n = t.dim;
  Curv4 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i, j, k, l) = 0.125 * (t(i, j, k, l) - t(j, i, k, l) - t(i, j, l, k) +
                                     t(j, i, l, k) + t(k, l, i, j) - t(l, k, i, j) -
                                     t(k, l, j, i) + t(l, k, j, i));
  return out;
}

Curv4 remove_bianchi_defect(const Curv4& t) {
  const int n = t.dim;
  Curv4 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double cyc =
              (t(i, j, k, l) + t(j, k, i, l) + t(k, i, j, l)) / 3.0;
          out(i, j, k, l) = t(i, j, k, l) - cyc;
        }
  return out;
}

Curv4 random_curvature(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Curv4 raw(n);
  for (double& x : raw.v) x = gauss(rng);
  return remove_bianchi_defect(symmetrize_pairs(raw));
}

Curv4 random_kahler_curvature(int n, const DMatrix& j, Rng& rng) {
  Curv4 t = random_curvature(n, rng);
  const double scale = std::max(1.0, t.max_abs());
  for (int iter = 0; iter < 500; ++iter) {
    // group average over {1, P12, P34, P12 P34}
    const Curv4 p12 = pull_first_pair(t, j);
    const Curv4 p34 = pull_second_pair(t, j);
    const Curv4 pboth = pull_second_pair(p12, j);
    for (size_t i = 0; i < t.v.size(); ++i)
      t.v[i] = 0.25 * (t.v[i] + p12.v[i] + p34.v[i] + pboth.v[i]);
    t = remove_bianchi_defect(t);
    const CurvatureResiduals res = curvature_residuals(t, /*with_bianchi=*/true);
    if (res.bianchi <= 1e-13 * scale && kahler_symmetry_residual(t, j) <= 1e-13 * scale)
      return t;
  }
  throw numeric_error("random_kahler_curvature: projection did not converge");
}

Curv4 kahler_einstein_bracket(int n, double mu, const DMatrix& j) {
  const Sym2 g = Sym2::metric(n);
  const AntiSym2 w = kahler_form(j);
  Curv4 bracket = kulkarni_nomizu(g, g) + kn_components(n, w.v, w.v) -
                  4.0 * pair_product(w, w);
  return (mu / (2.0 * (n + 2))) * bracket;
}

Curv4 random_kahler_einstein(int n, double mu, const DMatrix& j, Rng& rng) {
  const Curv4 kahler = random_kahler_curvature(n, j, rng);
  const Curv4 bochner = bochner_tensor_general(kahler, j);
  return bochner + kahler_einstein_bracket(n, mu, j);
}

}  // namespace einstab

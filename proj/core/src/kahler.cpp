#include "einstab/kahler.hpp"

#include <cmath>
#include <random>

#include "einstab/eigensolver.hpp"
#include "einstab/errors.hpp"
#include "einstab/operators.hpp"

namespace einstab {

namespace {

// Max absolute value over the six possible contraction traces of a
// curvature-type tensor.  All of them must vanish for a Bochner tensor.
double max_trace_residual(const Curv4& t) {
  const int n = t.dim;
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double tr[6] = {0, 0, 0, 0, 0, 0};
      for (int i = 0; i < n; ++i) {
        tr[0] += t(i, i, a, b);
        tr[1] += t(i, a, i, b);
        tr[2] += t(i, a, b, i);
        tr[3] += t(a, i, i, b);
        tr[4] += t(a, i, b, i);
        tr[5] += t(a, b, i, i);
      }
      for (double x : tr) worst = std::max(worst, std::fabs(x));
    }
  return worst;
}

Curv4 einstein_kahler_bracket(int n, const DMatrix& j) {
  const Sym2 g = Sym2::metric(n);
  const AntiSym2 w = kahler_form(j);
  return kulkarni_nomizu(g, g) + kn_components(n, w.v, w.v) - 4.0 * pair_product(w, w);
}

void validate_bochner(const Curv4& b, const char* origin) {
  validate_curvature(b, /*with_bianchi=*/true, "Bochner tensor");
  const double tol = 1e-10 * std::max(1.0, b.max_abs());
  if (max_trace_residual(b) > tol) {
    throw numeric_error(std::string(origin) +
                        ": Bochner tensor has a non-vanishing trace; the bracket "
                        "convention does not match the curvature input");
  }
}

Sym2 conjugate_by(const Sym2& h, const DMatrix& j) {
  const int n = h.dim;
  Sym2 out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) s += j(p, a) * j(q, b) * h(p, q);
      out(a, b) = s;  // h(J e_a, J e_b)
    }
  return out;
}

double frame_inner(const Sym2& a, const Sym2& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i) s += a.v[i] * b.v[i];
  return s;
}

}  // namespace

Curv4 bochner_tensor(const ManifoldModel& m) {
  if (!m.complex_structure)
    throw input_error("bochner_tensor: model carries no complex structure");
  require_valid(m);
  const int n = m.dim;
  Curv4 b = m.curvature - (m.mu / (2.0 * (n + 2))) * einstein_kahler_bracket(n, *m.complex_structure);
  validate_bochner(b, "bochner_tensor");
  return b;
}

Curv4 bochner_tensor_general(const Curv4& r, const DMatrix& j) {
  const int n = r.dim;
  if (j.rows != n || j.cols != n)
    throw input_error("bochner_tensor_general: complex structure size mismatch");
  const Contraction c = contract(r);
  const Sym2 g = Sym2::metric(n);
  const AntiSym2 w = kahler_form(j);

  // ric_j(a,b) = Ric(J e_a, e_b); antisymmetric whenever Ric is hermitian.
  std::vector<double> ric_j(static_cast<size_t>(n) * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int p = 0; p < n; ++p) s += j(p, a) * c.ric(p, b);
      ric_j[static_cast<size_t>(a) * n + b] = s;
    }

  AntiSym2 rj(n);
  rj.v = ric_j;

  Curv4 b = r + (c.scal / (2.0 * (n + 2) * (n + 4))) * einstein_kahler_bracket(n, j);
  const Curv4 phi = kulkarni_nomizu(c.ric, g) + kn_components(n, ric_j, w.v) -
                    2.0 * pair_product(rj, w) - 2.0 * pair_product(w, rj);
  b -= (1.0 / (n + 4)) * phi;
  validate_bochner(b, "bochner_tensor_general");
  return b;
}

std::pair<Sym2, Sym2> hermitian_split(const Sym2& h, const DMatrix& j) {
  if (std::fabs(h.trace()) > 1e-10 * std::max(1.0, h.max_abs()))
    throw input_error("hermitian_split: input must be traceless");
  const Sym2 hj = conjugate_by(h, j);
  Sym2 h1(h.dim), h2(h.dim);
  for (size_t i = 0; i < h.v.size(); ++i) {
    h1.v[i] = 0.5 * (h.v[i] + hj.v[i]);
    h2.v[i] = h.v[i] - h1.v[i];
  }
  return {h1, h2};
}

HermitianBases hermitian_subspace_bases(int n, const DMatrix& j) {
  const DMatrix traceless = traceless_sym2_basis(n);
  const int N = traceless.rows;
  const int dim_traceless = traceless.cols;

  auto build = [&](bool hermitian_part) {
    std::vector<std::vector<double>> kept;
    for (int c = 0; c < dim_traceless; ++c) {
      std::vector<double> coords(static_cast<size_t>(N));
      for (int r = 0; r < N; ++r) coords[static_cast<size_t>(r)] = traceless(r, c);
      Sym2 h = sym2_from_coordinates(n, coords);
      auto [h1, h2] = hermitian_split(h, j);
      std::vector<double> proj = sym2_coordinates(hermitian_part ? h1 : h2);
      // modified Gram-Schmidt against the kept columns
      for (const auto& k : kept) {
        const double d = dot(proj, k);
        for (size_t i = 0; i < proj.size(); ++i) proj[i] -= d * k[i];
      }
      const double len = norm(proj);
      if (len > 1e-10) {
        for (double& x : proj) x /= len;
        kept.push_back(std::move(proj));
      }
    }
    DMatrix q(N, static_cast<int>(kept.size()));
    for (int c = 0; c < q.cols; ++c)
      for (int r = 0; r < N; ++r) q(r, c) = kept[static_cast<size_t>(c)][static_cast<size_t>(r)];
    return q;
  };

  HermitianBases out;
  out.hermitian = build(true);
  out.skew_hermitian = build(false);
  return out;
}

KahlerSpectra kahler_spectra(const ManifoldModel& m) {
  const Curv4 b = bochner_tensor(m);
  const Sym2Operator op = sym2_operator(b);

  KahlerSpectra out;
  out.b_sup = top_eigenvalue(op.matrix);
  const HermitianBases bases = hermitian_subspace_bases(m.dim, *m.complex_structure);
  if (bases.hermitian.cols > 0)
    out.bplus_sup = top_eigenvalue(congruence(op.matrix, bases.hermitian));
  out.b_lq = out.b_sup * std::pow(m.volume, 2.0 / m.dim);
  return out;
}

double decomposition_identity_check(const ManifoldModel& m, int trials, std::uint64_t seed) {
  if (!m.complex_structure)
    throw input_error("decomposition_identity_check: model carries no complex structure");
  require_valid(m);
  const int n = m.dim;
  const DMatrix& j = *m.complex_structure;
  const Curv4 b = bochner_tensor(m);
  const double coeff = m.mu / (n + 2);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;

  auto relative = [](double lhs, double rhs, double scale) {
    return std::fabs(lhs - rhs) / std::max(1.0, scale);
  };

  for (int t = 0; t < trials; ++t) {
    Sym2 h(n);
    for (int a = 0; a < n; ++a)
      for (int bidx = a; bidx < n; ++bidx) h(a, bidx) = h(bidx, a) = gauss(rng);
    const double mean = h.trace() / n;
    for (int a = 0; a < n; ++a) h(a, a) -= mean;

    const Sym2 rh = apply_curvature_action(m.curvature, h);
    const Sym2 bh = apply_curvature_action(b, h);
    const Sym2 hj = conjugate_by(h, j);
    const double mixed = frame_inner(h, hj);
    const double h2 = h.norm_sq();

    const double lhs = frame_inner(rh, h);
    const double rhs = frame_inner(bh, h) - coeff * (h2 - 3.0 * mixed);
    worst = std::max(worst, relative(lhs, rhs, h2 * std::max(1.0, m.curvature.max_abs())));

    // hermitian / skew-hermitian specializations
    auto [h1, hsk] = hermitian_split(h, j);
    const double lhs1 = frame_inner(apply_curvature_action(m.curvature, h1), h1);
    const double rhs1 =
        frame_inner(apply_curvature_action(b, h1), h1) + 2.0 * coeff * h1.norm_sq();
    worst = std::max(worst, relative(lhs1, rhs1, h2 * std::max(1.0, m.curvature.max_abs())));

    const double lhs2 = frame_inner(apply_curvature_action(m.curvature, hsk), hsk);
    const double rhs2 =
        frame_inner(apply_curvature_action(b, hsk), hsk) - 4.0 * coeff * hsk.norm_sq();
    worst = std::max(worst, relative(lhs2, rhs2, h2 * std::max(1.0, m.curvature.max_abs())));
  }
  return worst;
}

}  // namespace einstab

#include "einstab/selftest.hpp"

#include <cmath>

#include "einstab/criteria.hpp"
#include "einstab/eigensolver.hpp"
#include "einstab/gauss_bonnet.hpp"
#include "einstab/kahler.hpp"
#include "einstab/model.hpp"
#include "einstab/operators.hpp"
#include "einstab/random_tensors.hpp"

namespace einstab {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Collector {
  SelftestResult result;

  void add(const std::string& name, double worst, double tol) {
    SelftestCheck c{name, worst <= tol, worst, tol};
    (c.passed ? result.passed : result.failed)++;
    result.checks.push_back(std::move(c));
  }
};

double rel(double got, double want, double scale) {
  return std::fabs(got - want) / std::max(1.0, std::fabs(scale));
}

}  // namespace

SelftestResult run_selftest(std::uint64_t seed) {
  Collector out;
  Rng rng(seed);

  // Kulkarni-Nomizu products satisfy all curvature symmetries and Bianchi.
  {
    double worst = 0.0;
    for (int n = 3; n <= 6; ++n)
      for (int t = 0; t < 5; ++t) {
        const Curv4 kn = kulkarni_nomizu(random_sym2(n, rng), random_sym2(n, rng));
        const CurvatureResiduals res = curvature_residuals(kn, true);
        worst = std::max(worst, std::max(res.max_symmetry(), res.bianchi) /
                                    std::max(1.0, kn.max_abs()));
      }
    out.add("kulkarni_nomizu symmetries and Bianchi", worst, 1e-12);
  }

  // Decomposition reassembles and is orthogonal.
  {
    double worst = 0.0;
    for (int n = 4; n <= 6; ++n)
      for (int t = 0; t < 5; ++t) {
        const Curv4 r = random_curvature(n, rng);
        const CurvatureDecomposition d = curvature_decompose(r);
        const Curv4 back = d.weyl + d.scalar_part + d.traceless_ricci;
        double diff = 0.0;
        for (size_t i = 0; i < r.v.size(); ++i)
          diff = std::max(diff, std::fabs(back.v[i] - r.v[i]));
        worst = std::max(worst, diff / std::max(1.0, r.max_abs()));
        const double parts =
            d.weyl.norm_sq() + d.scalar_part.norm_sq() + d.traceless_ricci.norm_sq();
        worst = std::max(worst, rel(parts, r.norm_sq(), r.norm_sq()));
      }
    out.add("curvature decomposition reassembly and orthogonality", worst, 1e-9);
  }

  // Weyl action: trace-free and indefinite.
  {
    double worst_trace = 0.0;
    bool indefinite = true;
    for (int n = 4; n <= 6; ++n)
      for (int t = 0; t < 5; ++t) {
        const Curv4 w = curvature_decompose(random_curvature(n, rng)).weyl;
        const Sym2Operator op = sym2_operator(w);
        double tr = 0.0;
        for (int a = 0; a < op.matrix.rows; ++a) tr += op.matrix(a, a);
        worst_trace = std::max(worst_trace, std::fabs(tr) / std::max(1.0, w.max_abs()));
        if (w.max_abs() > 1e-6) {
          const EigenResult eig = symmetric_eigen(op.matrix);
          if (!(eig.values.front() < 0.0 && eig.values.back() > 0.0)) indefinite = false;
        }
      }
    out.add("Weyl action trace", worst_trace, 1e-10);
    out.add("Weyl action indefiniteness", indefinite ? 0.0 : 1.0, 0.5);
  }

  // Permutation sum vs the dimension-4 explicit integrand.
  {
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Curv4 r = random_curvature(4, rng);
      const double pf = pfaffian_integrand(r) / (128.0 * kPi * kPi);
      const double ex = dim4_chi_density(r);
      worst = std::max(worst, std::fabs(pf - ex) / std::max(1e-12, std::fabs(ex)));
    }
    out.add("pfaffian vs dim-4 integrand", worst, 1e-9);
  }

  // Permutation sum vs the dimension-6 explicit integrand.
  {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const Curv4 r = random_curvature(6, rng);
      const double pf = -pfaffian_integrand(r) / (3072.0 * std::pow(kPi, 3));
      const double ex = dim6_chi_density(r);
      worst = std::max(worst, std::fabs(pf - ex) / std::max(1e-12, std::fabs(ex)));
    }
    out.add("pfaffian vs dim-6 integrand", worst, 1e-9);
  }

  // Cubic identity -6 c2 = 48 tr(hat^3).
  {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const CubicInvariants inv = cubic_invariants(random_curvature(6, rng));
      worst = std::max(worst, rel(-6.0 * inv.c2, 48.0 * inv.tr_hat3, inv.c2));
    }
    out.add("cubic trace identity", worst, 1e-9);
  }

  // Catalog golden Euler characteristics.
  {
    double worst = 0.0;
    worst = std::max(worst, std::fabs(euler_dim4(make_space_form(4, 1.0)).chi_explicit - 2.0));
    worst = std::max(worst, std::fabs(euler_dim4(make_cpn(2)).chi_explicit - 3.0));
    const ManifoldModel s2 = make_space_form(2, 1.0);
    worst = std::max(worst,
                     std::fabs(euler_dim4(make_product(s2, s2)).chi_explicit - 4.0));
    worst = std::max(worst, std::fabs(euler_dim6(make_space_form(6, 1.0)).chi_explicit - 2.0));
    worst = std::max(worst, std::fabs(euler_dim6(make_cpn(3)).chi_explicit - 4.0));
    const ManifoldModel s3 = make_space_form(3, 1.0);
    worst = std::max(worst, std::fabs(euler_dim6(make_product(s3, s3)).chi_explicit));
    out.add("Euler characteristic golden values", worst, 1e-7);
  }

  // Parallel-curvature cubic identity residual.
  {
    double worst = 0.0;
    for (const ManifoldModel& m :
         {make_space_form(4, 1.0), make_space_form(6, 1.0), make_cpn(2), make_cpn(3)}) {
      const double denom = std::fabs(m.mu) * m.curvature.norm_sq();
      worst = std::max(worst, std::fabs(sakai_identity_residual(m)) / denom);
    }
    out.add("parallel-curvature cubic identity", worst, 1e-9);
  }

  // Bochner tensor: vanishes on CP^m, trace-free on random Kahler-Einstein data.
  {
    double worst = 0.0;
    for (int m = 1; m <= 3; ++m)
      worst = std::max(worst, bochner_tensor(make_cpn(m)).max_abs());
    out.add("Bochner tensor of CP^m", worst, 1e-10);

    double worst_id = 0.0;
    for (const ManifoldModel& m : {make_cpn(2), make_cpn(3)})
      worst_id = std::max(worst_id, decomposition_identity_check(m, 25, seed));
    out.add("curvature/Bochner action identity", worst_id, 1e-10);
  }

  // Product instability witness values.
  {
    const ManifoldModel s2 = make_space_form(2, 1.0);
    const ManifoldModel s3 = make_space_form(3, 1.0);
    const auto w22 = product_instability_witness(make_product(s2, s2));
    const auto w33 = product_instability_witness(make_product(s3, s3));
    double worst = 1.0;
    if (w22 && w33)
      worst = std::max(std::fabs(w22->quadratic_form_value + 2.0),
                       std::fabs(w33->quadratic_form_value + 4.0));
    out.add("product instability witness values", worst, 1e-10);
  }

  // Eigensolver reconstruction residual.
  {
    double worst = 0.0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < 5; ++t) {
      const int n = 12;
      DMatrix a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a(i, j) = a(j, i) = gauss(rng);
      const EigenResult eig = symmetric_eigen(a, true);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int k = 0; k < n; ++k)
            s += eig.vectors(i, k) * eig.values[static_cast<size_t>(k)] * eig.vectors(j, k);
          worst = std::max(worst, std::fabs(s - a(i, j)) / std::max(1.0, a.max_abs()));
        }
    }
    out.add("eigensolver reconstruction", worst, 1e-10);
  }

  return out.result;
}

}  // namespace einstab

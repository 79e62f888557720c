#include <doctest.h>

#include "einstab/errors.hpp"
#include "einstab/gauss_bonnet.hpp"
#include "einstab/model.hpp"
#include "einstab/random_tensors.hpp"
#include "support.hpp"

using namespace einstab;
using namespace einstab::testing;

TEST_CASE("two-dimensional base case from the four-term permutation sum") {
  const ManifoldModel s2 = make_space_form(2, 1.0);
  // brute force: the sum has exactly four terms
  const Curv4& r = s2.curvature;
  const double psi_oracle = r(0, 1, 0, 1) - r(0, 1, 1, 0) - r(1, 0, 0, 1) + r(1, 0, 1, 0);
  CHECK(pfaffian_integrand(r) == doctest::Approx(psi_oracle).epsilon(1e-15));
  CHECK(chi_from_pfaffian(s2) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pfaffian rejects odd and oversized dimensions") {
  CHECK_THROWS_AS(pfaffian_integrand(Curv4(5)), input_error);
  CHECK_THROWS_AS(pfaffian_integrand(Curv4(8)), input_error);
}

TEST_CASE("pfaffian equals the explicit dimension-4 integrand on random tensors") {
  Rng rng(611);
  for (int trial = 0; trial < 100; ++trial) {
    const Curv4 r = random_curvature(4, rng);
    const double pf = pfaffian_integrand(r) / (128.0 * kPi * kPi);
    CHECK(rel_err(pf, dim4_chi_density(r)) <= 1e-9);
  }
}

TEST_CASE("pfaffian equals the explicit dimension-6 integrand on random tensors") {
  Rng rng(612);
  for (int trial = 0; trial < 100; ++trial) {
    const Curv4 r = random_curvature(6, rng);
    const double pf = -pfaffian_integrand(r) / (3072.0 * std::pow(kPi, 3));
    CHECK(rel_err(pf, dim6_chi_density(r)) <= 1e-9);
  }
}

TEST_CASE("dimension-4 golden values") {
  const GaussBonnetReport s4 = euler_dim4(make_space_form(4, 1.0));
  CHECK(std::fabs(s4.chi_explicit - 2.0) <= 1e-7);
  CHECK(std::fabs(s4.chi_pfaffian - 2.0) <= 1e-7);
  CHECK(s4.berger_nonnegative.value());

  const GaussBonnetReport cp2 = euler_dim4(make_cpn(2));
  CHECK(std::fabs(cp2.chi_explicit - 3.0) <= 1e-7);
  CHECK(std::fabs(cp2.chi_pfaffian - 3.0) <= 1e-7);

  const ManifoldModel s2 = make_space_form(2, 1.0);
  const GaussBonnetReport prod = euler_dim4(make_product(s2, s2));
  CHECK(std::fabs(prod.chi_explicit - 4.0) <= 1e-7);
  CHECK(std::fabs(prod.chi_pfaffian - 4.0) <= 1e-7);
}

TEST_CASE("the product of planes forces |W|^2 = 16/3 pointwise") {
  // Solving the Einstein Gauss-Bonnet formula for chi = 4, mu = 1,
  // vol = 16 pi^2 gives |W|^2 = 16/3; the assembled tensor must agree.
  const ManifoldModel s2 = make_space_form(2, 1.0);
  const GaussBonnetReport rep = euler_dim4(make_product(s2, s2));
  CHECK(rep.weyl_norm_sq == doctest::Approx(16.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("dimension-4 Einstein form matches the scalar piece") {
  const GaussBonnetReport s4 = euler_dim4(make_space_form(4, 1.0));
  CHECK(s4.scalar_part_norm_sq ==
        doctest::Approx((8.0 / 3.0) * s4.mu * s4.mu).epsilon(1e-12));
  CHECK(s4.traceless_ricci_norm_sq <= 1e-12);
}

TEST_CASE("dimension-6 golden values via all three forms") {
  const GaussBonnetReport s6 = euler_dim6(make_space_form(6, 1.0));
  for (double chi : {s6.chi_sakai.value(), s6.chi_einstein_form.value(),
                     s6.chi_weyl_form.value(), s6.chi_pfaffian})
    CHECK(std::fabs(chi - 2.0) <= 1e-7);

  const GaussBonnetReport cp3 = euler_dim6(make_cpn(3));
  for (double chi : {cp3.chi_sakai.value(), cp3.chi_einstein_form.value(),
                     cp3.chi_weyl_form.value(), cp3.chi_pfaffian})
    CHECK(std::fabs(chi - 4.0) <= 1e-7);
  CHECK(std::fabs(cp3.tr_what3) > 1e-3);  // the cubic Weyl trace genuinely enters

  const ManifoldModel s3 = make_space_form(3, 1.0);
  const GaussBonnetReport s3s3 = euler_dim6(make_product(s3, s3));
  for (double chi : {s3s3.chi_sakai.value(), s3s3.chi_einstein_form.value(),
                     s3s3.chi_weyl_form.value(), s3s3.chi_pfaffian})
    CHECK(std::fabs(chi - 0.0) <= 1e-7);

  const ManifoldModel s2 = make_space_form(2, 1.0);
  const ManifoldModel s4 = make_space_form(4, 1.0);
  const GaussBonnetReport s2s4 = euler_dim6(make_product(s2, s4, true));
  for (double chi : {s2s4.chi_sakai.value(), s2s4.chi_einstein_form.value(),
                     s2s4.chi_weyl_form.value(), s2s4.chi_pfaffian})
    CHECK(std::fabs(chi - 4.0) <= 1e-7);
}

TEST_CASE("three dimension-6 forms agree pairwise on symmetric Einstein models") {
  const ManifoldModel s3 = make_space_form(3, 1.0);
  for (const ManifoldModel& m :
       {make_space_form(6, 1.0), make_cpn(3), make_product(s3, s3),
        make_product(make_space_form(2, 1.0), make_space_form(4, 1.0), true),
        make_space_form(6, -1.0, 2.0)}) {
    const GaussBonnetReport rep = euler_dim6(m);
    const double a = rep.chi_sakai.value();
    const double b = rep.chi_einstein_form.value();
    const double c = rep.chi_weyl_form.value();
    CHECK(rel_err(a, b) <= 1e-8);
    CHECK(rel_err(b, c) <= 1e-8);
    CHECK(rel_err(a, rep.chi_pfaffian) <= 1e-8);
  }
}

TEST_CASE("euler characteristic is scale invariant") {
  for (double c : {0.5, 2.0, 10.0}) {
    const GaussBonnetReport base4 = euler_dim4(make_cpn(2));
    const GaussBonnetReport scaled4 = euler_dim4(rescale(make_cpn(2), c));
    CHECK(rel_err(scaled4.chi_explicit, base4.chi_explicit) <= 1e-9);
    CHECK(rel_err(scaled4.chi_pfaffian, base4.chi_pfaffian) <= 1e-9);

    const GaussBonnetReport base6 = euler_dim6(make_cpn(3));
    const GaussBonnetReport scaled6 = euler_dim6(rescale(make_cpn(3), c));
    CHECK(rel_err(scaled6.chi_explicit, base6.chi_explicit) <= 1e-9);
    CHECK(rel_err(scaled6.chi_weyl_form.value(), base6.chi_weyl_form.value()) <= 1e-9);
  }
}

TEST_CASE("Berger nonnegativity on the dimension-4 catalog") {
  const ManifoldModel s2 = make_space_form(2, 1.0);
  for (const ManifoldModel& m :
       {make_space_form(4, 1.0), make_cpn(2), make_product(s2, s2),
        make_space_form(4, -1.0, 1.0)}) {
    const GaussBonnetReport rep = euler_dim4(m);
    CHECK(rep.berger_nonnegative.value());
    CHECK(rep.chi_explicit >= -1e-9);
  }
  // flat torus: chi = 0 exactly
  const GaussBonnetReport flat = euler_dim4(make_space_form(4, 0.0, 1.0));
  CHECK(std::fabs(flat.chi_explicit) <= 1e-12);
  CHECK(flat.berger_nonnegative.value());
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(euler_dim4(make_space_form(6, 1.0)), input_error);
  CHECK_THROWS_AS(euler_dim6(make_space_form(4, 1.0)), input_error);
}

TEST_CASE("weyl form is withheld without a parallel-curvature or supplied gradient") {
  const ManifoldModel s6 = make_space_form(6, 1.0);
  ManifoldModel custom = make_custom("synthetic6", 6, s6.curvature.v, 1.0, 2, std::nullopt);
  CHECK(!custom.is_symmetric);
  const GaussBonnetReport withheld = euler_dim6(custom);
  CHECK(!withheld.chi_weyl_form.has_value());
  const GaussBonnetReport supplied = euler_dim6(custom, 0.0);
  CHECK(supplied.chi_weyl_form.has_value());
  CHECK(rel_err(supplied.chi_weyl_form.value(), supplied.chi_sakai.value()) <= 1e-8);
}

TEST_CASE("parallel-curvature cubic identity residual on the catalog") {
  const ManifoldModel s2 = make_space_form(2, 1.0);
  const ManifoldModel s3 = make_space_form(3, 1.0);
  for (const ManifoldModel& m :
       {make_space_form(4, 1.0), make_space_form(6, 1.0), make_cpn(2), make_cpn(3),
        make_product(s2, s2), make_product(s3, s3)}) {
    const double denom = std::fabs(m.mu) * m.curvature.norm_sq();
    CHECK(std::fabs(sakai_identity_residual(m)) <= 1e-9 * denom);
  }
}

TEST_CASE("cubic identity rejects non-symmetric models") {
  const ManifoldModel s4 = make_space_form(4, 1.0);
  ManifoldModel custom = make_custom("c", 4, s4.curvature.v, 1.0, std::nullopt, std::nullopt);
  CHECK_THROWS_AS(sakai_identity_residual(custom), input_error);
}

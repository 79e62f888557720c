#include <doctest.h>

#include "einstab/criteria.hpp"
#include "einstab/eigensolver.hpp"
#include "einstab/errors.hpp"
#include "einstab/kahler.hpp"
#include "einstab/model.hpp"
#include "einstab/operators.hpp"
#include "einstab/random_tensors.hpp"
#include "support.hpp"

using namespace einstab;
using namespace einstab::testing;

namespace {

ManifoldModel synthetic_kahler_einstein(int n, double mu, std::uint64_t seed,
                                        double bplus_target = 0.0) {
  Rng rng(seed);
  const DMatrix j = standard_j(n);
  Curv4 r = random_kahler_einstein(n, mu, j, rng);
  if (bplus_target > 0.0) {
    Curv4 b = r - kahler_einstein_bracket(n, mu, j);
    const HermitianBases bases = hermitian_subspace_bases(n, j);
    const double bplus =
        top_eigenvalue(congruence(sym2_operator(b).matrix, bases.hermitian));
    REQUIRE(bplus > 0.0);
    r = (bplus_target / bplus) * b + kahler_einstein_bracket(n, mu, j);
  }
  ManifoldModel m;
  m.name = "synthetic-ke";
  m.dim = n;
  m.mu = mu;
  m.curvature = r;
  m.volume = 1.0;
  m.complex_structure = j;
  require_valid(m);
  return m;
}

double matrix_trace(const DMatrix& m) {
  double t = 0.0;
  for (int i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

}  // namespace

TEST_CASE("Bochner tensor of projective spaces vanishes") {
  for (int m = 1; m <= 3; ++m) {
    const Curv4 b = bochner_tensor(make_cpn(m));
    CHECK(b.max_abs() <= 1e-10);
  }
}

TEST_CASE("Bochner tensor requires a complex structure") {
  CHECK_THROWS_AS(bochner_tensor(make_space_form(4, 1.0)), input_error);
}

TEST_CASE("general Bochner formula agrees with the Einstein form on Einstein input") {
  for (const ManifoldModel& m : {make_cpn(2), make_cpn(3)}) {
    const Curv4 general = bochner_tensor_general(m.curvature, *m.complex_structure);
    const Curv4 einstein_form = bochner_tensor(m);
    CHECK(max_component_diff(general, einstein_form) <= 1e-12);
  }
}

TEST_CASE("Bochner tensors of synthetic Kahler-Einstein data are fully trace-free") {
  for (int n : {4, 6}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const ManifoldModel m = synthetic_kahler_einstein(n, 1.0 + 0.3 * seed, seed);
      const Curv4 b = bochner_tensor(m);
      // contract over every slot pair
      const double scale = std::max(1.0, b.max_abs());
      const Contraction c = contract(b);
      CHECK(c.ric.max_abs() <= 1e-10 * scale);
      CHECK(std::fabs(c.scal) <= 1e-10 * scale);
      // the operator trace also vanishes
      CHECK(std::fabs(matrix_trace(sym2_operator(b).matrix)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("hermitian split projects, decomposes orthogonally, and is idempotent") {
  Rng rng(71);
  const int n = 6;
  const DMatrix j = standard_j(n);
  for (int trial = 0; trial < 25; ++trial) {
    const Sym2 h = random_traceless_sym2(n, rng);
    const auto [h1, h2] = hermitian_split(h, j);

    // reassembly and orthogonality
    double diff = 0.0;
    double inner = 0.0;
    for (size_t i = 0; i < h.v.size(); ++i) {
      diff = std::max(diff, std::fabs(h1.v[i] + h2.v[i] - h.v[i]));
      inner += h1.v[i] * h2.v[i];
    }
    CHECK(diff <= 4e-16 * std::max(1.0, h.max_abs()));
    CHECK(std::fabs(inner) <= 1e-12 * std::max(1.0, h.norm_sq()));
    CHECK(rel_err(h1.norm_sq() + h2.norm_sq(), h.norm_sq()) <= 1e-12);

    // fixed points
    const auto [h11, h12] = hermitian_split(h1, j);
    CHECK(h12.max_abs() <= 1e-13);
    const auto [h21, h22] = hermitian_split(h2, j);
    CHECK(h21.max_abs() <= 1e-13);
  }
}

TEST_CASE("hermitian split rejects non-traceless input") {
  const DMatrix j = standard_j(4);
  CHECK_THROWS_AS(hermitian_split(Sym2::metric(4), j), input_error);
}

TEST_CASE("hermitian and skew-hermitian subspaces have complex dimensions") {
  for (int n : {4, 6, 8}) {
    const int m = n / 2;
    const HermitianBases bases = hermitian_subspace_bases(n, standard_j(n));
    CHECK(bases.hermitian.cols == m * m - 1);
    CHECK(bases.skew_hermitian.cols == m * (m + 1));
  }
}

TEST_CASE("Kahler spectra of projective spaces vanish") {
  for (int m = 1; m <= 3; ++m) {
    const KahlerSpectra s = kahler_spectra(make_cpn(m));
    CHECK(std::fabs(s.b_sup) <= 1e-10);
    CHECK(std::fabs(s.bplus_sup) <= 1e-10);
    CHECK(std::fabs(s.b_lq) <= 1e-10);
  }
}

TEST_CASE("synthetic Bochner parts give a positive top eigenvalue") {
  const ManifoldModel m = synthetic_kahler_einstein(6, 2.0, 99);
  const KahlerSpectra s = kahler_spectra(m);
  CHECK(s.b_sup > 1e-3);
  CHECK(s.bplus_sup <= s.b_sup + 1e-12);
}

TEST_CASE("Bochner action preserves the hermitian splitting") {
  for (int n : {4, 6}) {
    const ManifoldModel m = synthetic_kahler_einstein(n, 1.5, 321);
    const Curv4 b = bochner_tensor(m);
    const Sym2Operator op = sym2_operator(b);
    const HermitianBases bases = hermitian_subspace_bases(n, *m.complex_structure);
    const DMatrix cross =
        matmul(transpose(bases.hermitian), matmul(op.matrix, bases.skew_hermitian));
    CHECK(cross.max_abs() <= 1e-10 * std::max(1.0, b.max_abs()));
  }
}

TEST_CASE("curvature action identity and its restrictions on catalog models") {
  for (int m = 1; m <= 3; ++m)
    CHECK(decomposition_identity_check(make_cpn(m), 100, 5 + m) <= 1e-10);
}

TEST_CASE("curvature action identity on perturbed Kahler-Einstein tensors") {
  for (int n : {4, 6})
    for (std::uint64_t seed = 20; seed < 30; ++seed) {
      const ManifoldModel m = synthetic_kahler_einstein(n, 0.7 + 0.1 * seed, seed);
      CHECK(decomposition_identity_check(m, 20, seed) <= 1e-10);
    }
}

TEST_CASE("hermitian tensors on the projective space feel +2 mu/(n+2)") {
  const ManifoldModel cp3 = make_cpn(3);
  const int n = 6;
  const DMatrix& j = *cp3.complex_structure;
  Rng rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [h1, h2] = hermitian_split(random_traceless_sym2(n, rng), j);
    // <R h1, h1> = 2 mu/(n+2) |h1|^2 = 2 |h1|^2 since B = 0 and mu = n + 2
    const Sym2 rh1 = apply_curvature_action(cp3.curvature, h1);
    double inner1 = 0.0;
    for (size_t i = 0; i < rh1.v.size(); ++i) inner1 += rh1.v[i] * h1.v[i];
    CHECK(rel_err(inner1, 2.0 * h1.norm_sq()) <= 1e-10);

    const Sym2 rh2 = apply_curvature_action(cp3.curvature, h2);
    double inner2 = 0.0;
    for (size_t i = 0; i < rh2.v.size(); ++i) inner2 += rh2.v[i] * h2.v[i];
    CHECK(rel_err(inner2, -4.0 * h2.norm_sq()) <= 1e-10);
  }
}

TEST_CASE("four-dimensional Bochner action matches the anti-self-dual Weyl action") {
  for (std::uint64_t seed = 40; seed < 45; ++seed) {
    const ManifoldModel m = synthetic_kahler_einstein(4, 2.0, seed);
    const Curv4 b = bochner_tensor(m);
    const Curv4 w = curvature_decompose(m.curvature).weyl;
    const Curv4 w_minus = curv4_from_form2(dual_split(w).minus);

    const EigenResult eb = symmetric_eigen(sym2_operator(b).matrix);
    const EigenResult ew = symmetric_eigen(sym2_operator(w_minus).matrix);
    REQUIRE(eb.values.size() == ew.values.size());
    for (size_t i = 0; i < eb.values.size(); ++i)
      CHECK(std::fabs(eb.values[i] - ew.values[i]) <= 1e-9 * std::max(1.0, b.max_abs()));
    // and the tensors agree componentwise
    CHECK(max_component_diff(b, w_minus) <= 1e-9 * std::max(1.0, b.max_abs()));
  }
}

TEST_CASE("Kahler criteria on projective spaces") {
  const auto reports3 = kahler_criteria(make_cpn(3));
  REQUIRE(reports3.size() == 4);
  CHECK(reports3[0].id == "kahler_sup");
  CHECK(reports3[0].threshold == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(reports3[0].measured <= 1e-10);
  CHECK(reports3[0].contribution == Contribution::Stable);

  const auto reports2 = kahler_criteria(make_cpn(2));
  CHECK(reports2[0].threshold == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(reports2[0].contribution == Contribution::Stable);
  CHECK(reports2[1].id == "kahler_integral");
  CHECK(reports2[1].contribution == Contribution::Stable);
  CHECK(reports2[2].applicable == false);  // negative-case bound
  CHECK(reports2[3].applicable == false);  // nonpositive-case report
}

TEST_CASE("corrected negative-constant criterion with a tuned synthetic input") {
  // n = 6, mu = -5, bplus_sup scaled to 1: threshold -mu(n-2)/(n+2) = 2.5.
  const ManifoldModel m = synthetic_kahler_einstein(6, -5.0, 4242, /*bplus_target=*/1.0);
  const auto reports = kahler_criteria(m);
  const CriterionReport* negative = nullptr;
  const CriterionReport* nonpositive = nullptr;
  for (const auto& r : reports) {
    if (r.id == "kahler_negative") negative = &r;
    if (r.id == "kahler_nonpositive") nonpositive = &r;
  }
  REQUIRE(negative != nullptr);
  CHECK(negative->applicable);
  CHECK(negative->threshold == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(negative->measured == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(negative->strict);
  CHECK(negative->contribution == Contribution::StrictlyStable);
  REQUIRE(nonpositive != nullptr);
  CHECK(nonpositive->contribution == Contribution::Stable);
}

TEST_CASE("Kahler criteria degrade to not-applicable without a complex structure") {
  const auto reports = kahler_criteria(make_space_form(4, 1.0));
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CHECK(!r.applicable);
    CHECK(r.contribution == Contribution::None);
  }
}

TEST_CASE("the Kahler sup threshold is sharper than the Weyl sup threshold") {
  for (int n = 4; n <= 10; n += 2) {
    const double mu = 1.7;
    const double kahler = mu * (n - 2) / (2.0 * (n + 2));
    const double weyl = mu * (n + 1) / (2.0 * (n - 1));
    CHECK(kahler < weyl);
  }
}

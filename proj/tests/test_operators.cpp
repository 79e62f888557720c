#include <doctest.h>

#include "einstab/eigensolver.hpp"
#include "einstab/errors.hpp"
#include "einstab/model.hpp"
#include "einstab/operators.hpp"
#include "einstab/random_tensors.hpp"
#include "support.hpp"

using namespace einstab;
using namespace einstab::testing;

namespace {

double matrix_trace(const DMatrix& m) {
  double t = 0.0;
  for (int i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

}  // namespace

TEST_CASE("sym2 basis pairs and coordinates round-trip") {
  Rng rng(31);
  const Sym2 h = random_sym2(5, rng);
  const Sym2 back = sym2_from_coordinates(5, sym2_coordinates(h));
  CHECK(h.symmetry_residual() == 0.0);
  for (size_t i = 0; i < h.v.size(); ++i)
    CHECK(back.v[i] == doctest::Approx(h.v[i]).epsilon(1e-15));
}

TEST_CASE("sym2_operator diagonal entries are -T_ijji for off-diagonal basis pairs") {
  Rng rng(32);
  const Curv4 t = random_curvature(4, rng);
  const Sym2Operator op = sym2_operator(t);
  const auto pairs = sym2_pairs(4);
  for (size_t a = 0; a < pairs.size(); ++a) {
    const auto [i, j] = pairs[a];
    if (i == j) continue;
    CHECK(op.matrix(static_cast<int>(a), static_cast<int>(a)) ==
          doctest::Approx(-t(i, j, j, i)).epsilon(1e-12));
  }
}

TEST_CASE("sym2_operator applied to the metric reproduces the Ricci tensor") {
  Rng rng(33);
  for (int n : {4, 5, 6}) {
    const Curv4 t = random_curvature(n, rng);
    const Sym2Operator op = sym2_operator(t);
    const std::vector<double> image = matvec(op.matrix, sym2_coordinates(Sym2::metric(n)));
    const std::vector<double> ric = sym2_coordinates(ricci_oracle(t));
    for (size_t a = 0; a < ric.size(); ++a)
      CHECK(std::fabs(image[a] - ric[a]) <= 1e-10 * std::max(1.0, t.max_abs()));
  }
}

TEST_CASE("Weyl-part operator is trace-free and indefinite") {
  Rng rng(34);
  for (int n : {4, 5, 6}) {
    for (int trial = 0; trial < 34; ++trial) {
      const Curv4 w = curvature_decompose(random_curvature(n, rng)).weyl;
      const Sym2Operator op = sym2_operator(w);
      CHECK(std::fabs(matrix_trace(op.matrix)) <= 1e-10 * std::max(1.0, w.max_abs()));
      if (w.max_abs() > 1e-6) {
        const EigenResult eig = symmetric_eigen(op.matrix);
        CHECK(eig.values.front() < -1e-12);
        CHECK(eig.values.back() > 1e-12);
      }
    }
  }
}

TEST_CASE("Einstein curvature action on traceless tensors") {
  // Constant curvature K: the action is -K id on traceless symmetric
  // tensors, i.e. the Weyl action minus mu/(n-1) times the identity.
  const int n = 4;
  const double k = 1.0;
  const Sym2 g = Sym2::metric(n);
  const Curv4 r = (k / 2.0) * kulkarni_nomizu(g, g);
  const Sym2Operator op = sym2_operator(r);
  const DMatrix restricted = congruence(op.matrix, traceless_sym2_basis(n));
  const EigenResult eig = symmetric_eigen(restricted);
  for (double v : eig.values) CHECK(v == doctest::Approx(-k).epsilon(1e-12));
}

TEST_CASE("Einstein action decomposes as Weyl action minus mu/(n-1) on traceless tensors") {
  // R°h = W°h + mu/(n-1){g tr h - h}; on traceless h the bracket is -h.
  const ManifoldModel cp2 = make_cpn(2);
  const int n = cp2.dim;
  const DMatrix q = traceless_sym2_basis(n);
  const DMatrix r_restricted = congruence(sym2_operator(cp2.curvature).matrix, q);
  const Curv4 w = curvature_decompose(cp2.curvature).weyl;
  const DMatrix w_restricted = congruence(sym2_operator(w).matrix, q);
  for (int a = 0; a < r_restricted.rows; ++a)
    for (int b = 0; b < r_restricted.cols; ++b) {
      const double expected =
          w_restricted(a, b) - (a == b ? cp2.mu / (n - 1.0) : 0.0);
      CHECK(std::fabs(r_restricted(a, b) - expected) <= 1e-12 * std::max(1.0, cp2.mu));
    }
}

TEST_CASE("form2_operator of the constant-curvature tensor is a multiple of the identity") {
  for (int n : {4, 6}) {
    const double mu = 2.5;
    const Sym2 g = Sym2::metric(n);
    const Curv4 t = (mu / (2.0 * (n - 1))) * kulkarni_nomizu(g, g);
    const Form2Operator op = form2_operator(t);
    for (int a = 0; a < op.matrix.rows; ++a)
      for (int b = 0; b < op.matrix.cols; ++b)
        CHECK(op.matrix(a, b) ==
              doctest::Approx(a == b ? mu / (n - 1) : 0.0).epsilon(1e-14));
  }
}

TEST_CASE("form2_operator of zero is zero") {
  CHECK(form2_operator(Curv4(4)).matrix.max_abs() == 0.0);
}

TEST_CASE("six-dimensional Einstein operator splits as Weyl plus mu/5 identity") {
  const ManifoldModel cp3 = make_cpn(3);
  const Curv4 w = curvature_decompose(cp3.curvature).weyl;
  const Form2Operator r_hat = form2_operator(cp3.curvature);
  const Form2Operator w_hat = form2_operator(w);
  for (int a = 0; a < r_hat.matrix.rows; ++a)
    for (int b = 0; b < r_hat.matrix.cols; ++b) {
      const double expected = w_hat.matrix(a, b) + (a == b ? cp3.mu / 5.0 : 0.0);
      CHECK(std::fabs(r_hat.matrix(a, b) - expected) <= 1e-12 * std::max(1.0, cp3.mu));
    }
}

TEST_CASE("cubic invariants of zero vanish") {
  const CubicInvariants inv = cubic_invariants(Curv4(4));
  CHECK(inv.c1 == 0.0);
  CHECK(inv.c2 == 0.0);
  CHECK(inv.tr_hat3 == 0.0);
}

TEST_CASE("cubic contraction identity -6 c2 == 48 tr_hat3") {
  Rng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const Curv4 t = random_curvature(6, rng);
    const CubicInvariants inv = cubic_invariants(t);
    CHECK(rel_err(-6.0 * inv.c2, 48.0 * inv.tr_hat3) <= 1e-9);
  }
}

TEST_CASE("cubic invariants on constant curvature have closed forms") {
  // c1 = -n(n-1)(n-3) and c2 = -8 K^3 n(n-1)/2 at curvature K = 1.
  for (int n : {4, 5, 6}) {
    const Sym2 g = Sym2::metric(n);
    const Curv4 r = 0.5 * kulkarni_nomizu(g, g);
    const CubicInvariants inv = cubic_invariants(r);
    CHECK(inv.c1 == doctest::Approx(-n * (n - 1) * (n - 3)).epsilon(1e-12));
    CHECK(inv.c2 == doctest::Approx(-4.0 * n * (n - 1)).epsilon(1e-12));
  }
}

TEST_CASE("six-dimensional cubic trace splits against the Weyl part") {
  // 48 tr R^3 = 48 tr W^3 + 36/5 mu |W|^2 + 144/25 mu^3 on Einstein fibers.
  for (const ManifoldModel& m : {make_cpn(3), make_space_form(6, 1.0)}) {
    const Curv4 w = curvature_decompose(m.curvature).weyl;
    const double lhs = 48.0 * cubic_invariants(m.curvature).tr_hat3;
    const double rhs = 48.0 * cubic_invariants(w).tr_hat3 +
                       (36.0 / 5.0) * m.mu * w.norm_sq() +
                       (144.0 / 25.0) * m.mu * m.mu * m.mu;
    CHECK(rel_err(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("dual split requires dimension 4 and a trace-free input") {
  CHECK_THROWS_AS(dual_split(Curv4(6)), input_error);
  const Sym2 g = Sym2::metric(4);
  CHECK_THROWS_AS(dual_split(kulkarni_nomizu(g, g)), input_error);
}

TEST_CASE("dual split of zero is zero") {
  const DualSplit d = dual_split(Curv4(4));
  CHECK(d.plus.matrix.max_abs() == 0.0);
  CHECK(d.minus.matrix.max_abs() == 0.0);
}

TEST_CASE("dual split reassembles the 2-form operator of a Weyl part") {
  Rng rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const Curv4 w = curvature_decompose(random_curvature(4, rng)).weyl;
    const DualSplit d = dual_split(w);
    const Form2Operator hat = form2_operator(w);
    double worst = 0.0;
    double cross = 0.0;
    const DMatrix star = hodge_star_dim4();
    const DMatrix commutator_a = matmul(star, hat.matrix);
    const DMatrix commutator_b = matmul(hat.matrix, star);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        worst = std::max(worst, std::fabs(d.plus.matrix(a, b) + d.minus.matrix(a, b) -
                                          hat.matrix(a, b)));
        cross = std::max(cross, std::fabs(commutator_a(a, b) - commutator_b(a, b)));
      }
    CHECK(worst <= 1e-10 * std::max(1.0, w.max_abs()));
    CHECK(cross <= 1e-10 * std::max(1.0, w.max_abs()));  // star commutes with Weyl
  }
}

TEST_CASE("dual split energies recover the full Weyl norm") {
  Rng rng(37);
  const Curv4 w = curvature_decompose(random_curvature(4, rng)).weyl;
  const DualSplit d = dual_split(w);
  double plus_sq = 0.0, minus_sq = 0.0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      plus_sq += d.plus.matrix(a, b) * d.plus.matrix(a, b);
      minus_sq += d.minus.matrix(a, b) * d.minus.matrix(a, b);
    }
  CHECK(rel_err(4.0 * (plus_sq + minus_sq), w.norm_sq()) <= 1e-10);
}

TEST_CASE("Fubini-Study plane is self-dual for the complex orientation") {
  const ManifoldModel cp2 = make_cpn(2);
  const Curv4 w = curvature_decompose(cp2.curvature).weyl;
  const DualSplit d = dual_split(w);
  CHECK(d.minus.matrix.max_abs() <= 1e-10);
  CHECK(d.plus.matrix.max_abs() > 1.0);
}

TEST_CASE("product of two planes balances its dual energies") {
  const ManifoldModel s2 = make_space_form(2, 1.0);
  const ManifoldModel prod = make_product(s2, s2);
  const Curv4 w = curvature_decompose(prod.curvature).weyl;
  const DualSplit d = dual_split(w);
  double plus_sq = 0.0, minus_sq = 0.0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      plus_sq += d.plus.matrix(a, b) * d.plus.matrix(a, b);
      minus_sq += d.minus.matrix(a, b) * d.minus.matrix(a, b);
    }
  CHECK(std::fabs(plus_sq - minus_sq) <= 1e-10);
}

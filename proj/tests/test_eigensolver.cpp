#include <doctest.h>

#include <random>

#include "einstab/eigensolver.hpp"
#include "einstab/errors.hpp"
#include "einstab/operators.hpp"
#include "einstab/random_tensors.hpp"
#include "support.hpp"

using namespace einstab;
using namespace einstab::testing;

TEST_CASE("2x2 swap matrix") {
  DMatrix a(2, 2);
  a(0, 1) = a(1, 0) = 1.0;
  const EigenResult eig = symmetric_eigen(a);
  CHECK(eig.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("diagonal matrices return their sorted diagonal") {
  DMatrix a(4, 4);
  a(0, 0) = 3.0;
  a(1, 1) = -1.0;
  a(2, 2) = 0.5;
  a(3, 3) = 10.0;
  const EigenResult eig = symmetric_eigen(a);
  CHECK(eig.values == std::vector<double>{-1.0, 0.5, 3.0, 10.0});
}

TEST_CASE("zero matrix") {
  const EigenResult eig = symmetric_eigen(DMatrix(3, 3));
  for (double v : eig.values) CHECK(v == 0.0);
}

TEST_CASE("asymmetric input is rejected") {
  DMatrix a(2, 2);
  a(0, 1) = 1.0;
  a(1, 0) = 0.5;
  CHECK_THROWS_AS(symmetric_eigen(a), input_error);
  CHECK_THROWS_AS(symmetric_eigen(DMatrix(2, 3)), input_error);
}

TEST_CASE("reconstruction residual stays below 1e-10 of the matrix scale") {
  std::mt19937_64 rng(91);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int n : {5, 12, 21, 36}) {
    DMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a(i, j) = a(j, i) = gauss(rng);
    const EigenResult eig = symmetric_eigen(a, true);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
          s += eig.vectors(i, k) * eig.values[static_cast<size_t>(k)] * eig.vectors(j, k);
        worst = std::max(worst, std::fabs(s - a(i, j)));
      }
    CHECK(worst <= 1e-10 * a.max_abs());
    for (size_t k = 0; k + 1 < eig.values.size(); ++k)
      CHECK(eig.values[k] <= eig.values[k + 1]);
  }
}

TEST_CASE("eigenvalues of a trace-free operator sum to zero") {
  Rng rng(93);
  const Curv4 w = curvature_decompose(random_curvature(5, rng)).weyl;
  const EigenResult eig = symmetric_eigen(sym2_operator(w).matrix);
  double sum = 0.0;
  for (double v : eig.values) sum += v;
  CHECK(std::fabs(sum) <= 1e-10 * std::max(1.0, w.max_abs()));
}

TEST_CASE("results are deterministic and scale-equivariant") {
  std::mt19937_64 rng(92);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DMatrix a(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = i; j < 9; ++j) a(i, j) = a(j, i) = gauss(rng);

  const EigenResult first = symmetric_eigen(a);
  const EigenResult second = symmetric_eigen(a);
  CHECK(first.values == second.values);  // bitwise identical

  DMatrix scaled = a;
  for (double& x : scaled.v) x *= 1024.0;  // exact power of two
  const EigenResult big = symmetric_eigen(scaled);
  for (size_t k = 0; k < first.values.size(); ++k)
    CHECK(big.values[k] == doctest::Approx(1024.0 * first.values[k]).epsilon(1e-13));
}

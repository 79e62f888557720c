#include <benchmark/benchmark.h>

#include "einstab/criteria.hpp"
#include "einstab/eigensolver.hpp"
#include "einstab/gauss_bonnet.hpp"
#include "einstab/kahler.hpp"
#include "einstab/model.hpp"
#include "einstab/operators.hpp"
#include "einstab/random_tensors.hpp"
#include "einstab/spectra.hpp"

namespace {

using namespace einstab;

void KulkarniNomizu(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Sym2 h = random_sym2(n, rng);
  const Sym2 k = random_sym2(n, rng);
  for (auto _ : state) {
    Curv4 t = kulkarni_nomizu(h, k);
    benchmark::DoNotOptimize(t.v.data());
  }
}
BENCHMARK(KulkarniNomizu)->Arg(4)->Arg(6)->Arg(8);

void PfaffianIntegrand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const Curv4 r = random_curvature(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian_integrand(r));
}
BENCHMARK(PfaffianIntegrand)->Arg(4)->Arg(6);

void Dim6ExplicitIntegrand(benchmark::State& state) {
  Rng rng(3);
  const Curv4 r = random_curvature(6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(dim6_chi_density(r));
}
BENCHMARK(Dim6ExplicitIntegrand);

void CubicInvariantsBench(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const Curv4 r = random_curvature(n, rng);
  for (auto _ : state) {
    CubicInvariants inv = cubic_invariants(r);
    benchmark::DoNotOptimize(inv.tr_hat3);
  }
}
BENCHMARK(CubicInvariantsBench)->Arg(4)->Arg(6);

void JacobiEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a(i, j) = a(j, i) = gauss(rng);
  for (auto _ : state) {
    EigenResult eig = symmetric_eigen(a);
    benchmark::DoNotOptimize(eig.values.data());
  }
}
BENCHMARK(JacobiEigen)->Arg(10)->Arg(21)->Arg(36);

void BochnerTensor(benchmark::State& state) {
  const ManifoldModel cp3 = make_cpn(3);
  for (auto _ : state) {
    Curv4 b = bochner_tensor(cp3);
    benchmark::DoNotOptimize(b.v.data());
  }
}
BENCHMARK(BochnerTensor);

void EvaluateAllSphere6(benchmark::State& state) {
  const ManifoldModel s6 = make_space_form(6, 1.0);
  for (auto _ : state) {
    StabilityReport rep = evaluate_all(s6);
    benchmark::DoNotOptimize(rep.criteria.data());
  }
}
BENCHMARK(EvaluateAllSphere6);

void SectionalRange(benchmark::State& state) {
  const ManifoldModel cp2 = make_cpn(2);
  for (auto _ : state) {
    auto range = sectional_range(cp2, 100, 7);
    benchmark::DoNotOptimize(range.first);
  }
}
BENCHMARK(SectionalRange);

}  // namespace

BENCHMARK_MAIN();

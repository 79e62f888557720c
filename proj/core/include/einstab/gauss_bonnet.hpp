#ifndef EINSTAB_GAUSS_BONNET_HPP
#define EINSTAB_GAUSS_BONNET_HPP

#include <optional>

#include "einstab/model.hpp"
#include "einstab/tensor.hpp"

namespace einstab {

/// Euler-characteristic computation with the integrand pieces it was
/// assembled from.  chi_explicit comes from the closed dimension formula
/// (general in dim 4, Sakai's in dim 6); chi_pfaffian from the permutation
/// sum.  For homogeneous models the two agree to ~1e-8 relative.
struct GaussBonnetReport {
  int dim = 0;
  double chi_pfaffian = 0.0;
  double chi_explicit = 0.0;
  std::optional<int> chi_expected;

  // integrand pieces (pointwise values at the basepoint)
  double weyl_norm_sq = 0.0;
  double scalar_part_norm_sq = 0.0;
  double traceless_ricci_norm_sq = 0.0;
  double riemann_norm_sq = 0.0;
  double mu = 0.0;
  double c1 = 0.0;       // dim 6 cubic contractions
  double c2 = 0.0;
  double tr_what3 = 0.0; // trace of the cubed Weyl 2-form operator
  std::optional<double> grad_weyl_sq_integral;

  // dim 4 only: chi >= 0 holds for Einstein metrics (Berger)
  std::optional<bool> berger_nonnegative;

  // dim 6 only: the three equivalent evaluations
  std::optional<double> chi_sakai;
  std::optional<double> chi_einstein_form;
  std::optional<double> chi_weyl_form;  // absent for non-symmetric models without grad W
};

/// Pfaffian curvature polynomial: sum over permutation pairs of S_n
/// (n = 2m) of sgn(s) sgn(t) prod_a T_{s(2a-1) s(2a) t(2a-1) t(2a)}.
/// Only even n <= 6 are supported (the sum has (n!)^2 terms); summation
/// runs over fixed-order partials combined by pairwise tree reduction.
double pfaffian_integrand(const Curv4& t);

/// chi contribution (-1)^m / (2^{3m} pi^m m!) * Psi * volume of a
/// homogeneous model.
double chi_from_pfaffian(const ManifoldModel& m);

/// Explicit integrand value of the dimension-4 Gauss-Bonnet formula,
/// (|W|^2 + |Sc|^2 - |U|^2) / (32 pi^2), per unit volume.
double dim4_chi_density(const Curv4& t);

/// Sakai's general dimension-6 integrand divided by 384 pi^3, per unit
/// volume (no Einstein assumption).
double dim6_chi_density(const Curv4& t);

GaussBonnetReport euler_dim4(const ManifoldModel& m);

/// Dimension-6 report carrying all three evaluations: Sakai's general
/// formula, the Einstein cubic form, and the Weyl-operator form.  The last
/// needs the integral of |grad W|^2, which is zero for symmetric models and
/// must be supplied otherwise (else that form is withheld).
GaussBonnetReport euler_dim6(const ManifoldModel& m,
                             std::optional<double> grad_weyl_sq = std::nullopt);

/// Cubic identity bracket 4 c1 + 2 c2 + 2 mu |R|^2, which vanishes for
/// Einstein models with parallel curvature.
double sakai_identity_residual(const ManifoldModel& m);

}  // namespace einstab

#endif

#ifndef EINSTAB_CRITERIA_HPP
#define EINSTAB_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "einstab/model.hpp"
#include "einstab/spectra.hpp"
#include "einstab/tensor.hpp"

namespace einstab {

enum class Contribution { StrictlyStable, Stable, None };
enum class Overall { StrictlyStable, Stable, Unstable, Inconclusive };

const char* to_string(Contribution c);
const char* to_string(Overall o);

/// One evaluated stability criterion.  margin = threshold - measured, so a
/// positive margin means the criterion is satisfied; equality within
/// 1e-12 counts as satisfied non-strictly.
struct CriterionReport {
  std::string id;
  bool applicable = true;
  std::string note;
  double threshold = 0.0;
  double measured = 0.0;
  double margin = 0.0;
  bool strict = false;
  Contribution contribution = Contribution::None;
  std::optional<double> lower_bound;  // spectral lower bound for the Einstein operator
  std::optional<double> yamabe;       // conformal-class constant n mu vol^{2/n}
  bool advisory = false;              // sampled inputs; never decides the overall verdict
};

/// Explicit destabilizing direction with its quadratic-form value per unit
/// L^2 norm (negative value = instability).
struct InstabilityWitness {
  Sym2 direction;
  double quadratic_form_value = 0.0;
};

struct StabilityReport {
  std::string model_name;
  std::vector<CriterionReport> criteria;
  Overall overall = Overall::Inconclusive;
  std::optional<InstabilityWitness> witness;
};

// Individual criteria.  Each has an overload taking a precomputed
// SpectralSummary so evaluate_all diagonalizes the fiber only once.

/// Stable when the top curvature-action eigenvalue on traceless tensors
/// stays below max{-mu, mu/2}; strict inequality gives strict stability.
CriterionReport koiso_criterion(const ManifoldModel& m);
CriterionReport koiso_criterion(const ManifoldModel& m, const SpectralSummary& s);

/// Sup-norm Weyl criterion with threshold max{mu(n+1)/(2(n-1)),
/// -mu(n-2)/(n-1)}, plus the spectral lower bound it produces.
CriterionReport weyl_sup_criterion(const ManifoldModel& m);
CriterionReport weyl_sup_criterion(const ManifoldModel& m, const SpectralSummary& s);

/// L^{n/2} Weyl criterion (positive Einstein constant only).
CriterionReport weyl_integral_criterion(const ManifoldModel& m);
CriterionReport weyl_integral_criterion(const ManifoldModel& m, const SpectralSummary& s);

/// Quadratic-form lower bound of the integral criterion at unit volume;
/// vanishes exactly at the criterion threshold.
double weyl_integral_lower_bound(int n, double mu_unit, double w_lq);

/// Six-dimensional Euler-characteristic criterion, evaluated after an
/// internal rescale to unit volume.
CriterionReport six_dim_euler_criterion(const ManifoldModel& m);

/// Sectional-pinching criterion (advisory: bounds are sampled estimates).
CriterionReport pinching_criterion(const ManifoldModel& m);
CriterionReport pinching_criterion(const ManifoldModel& m, const SpectralSummary& s);

/// Isolation diagnostics: the L^{n/2} Weyl gap and, in dimension 4, the
/// self-dual energy gap.  Purely informative, contribution None.
std::vector<CriterionReport> isolation_checks(const ManifoldModel& m);

/// Parallel traceless block tensor on positive Einstein products; its
/// quadratic-form value per unit norm is -2 mu.
std::optional<InstabilityWitness> product_instability_witness(const ManifoldModel& m);

/// Kahler-Einstein criteria (sup and integral Bochner bounds, the negative
/// case bound, and the unconditional nonpositive-constant report).
///
/// The negative-constant check compares the largest hermitian-restricted
/// Bochner eigenvalue against -mu(n-2)/(n+2).  An earlier published version
/// of this bound used -mu n/(n+2); that constant does not survive the
/// hermitian reduction and is never used as a verdict source here.
std::vector<CriterionReport> kahler_criteria(const ManifoldModel& m);

struct EvaluateOptions {
  std::uint64_t seed = kDefaultSeed;
  int sectional_samples = kDefaultSectionalSamples;
  std::vector<std::string> criteria_filter;  // empty = all applicable
};

/// Every criterion id accepted by EvaluateOptions::criteria_filter.
const std::vector<std::string>& criterion_ids();

/// Runs every applicable criterion in a fixed order and aggregates:
/// a witness forces Unstable; otherwise a strict non-advisory criterion
/// gives StrictlyStable, a non-strict one Stable, else Inconclusive.
StabilityReport evaluate_all(const ManifoldModel& m, const EvaluateOptions& opts = {});

}  // namespace einstab

#endif

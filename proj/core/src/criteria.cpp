#include "einstab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "einstab/errors.hpp"
#include "einstab/gauss_bonnet.hpp"
#include "einstab/kahler.hpp"
#include "einstab/operators.hpp"

namespace einstab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double equality_tol(double threshold, double measured) {
  return 1e-12 * std::max({1.0, std::fabs(threshold), std::fabs(measured)});
}

// Fills margin/strict/contribution for a "measured <= threshold" criterion.
// on_strict / on_equal say what a strict resp. borderline pass contributes.
void classify(CriterionReport& r, Contribution on_strict, Contribution on_equal) {
  r.margin = (r.threshold - r.measured) + 0.0;  // normalizes -0
  const double tol = equality_tol(r.threshold, r.measured);
  if (r.margin > tol) {
    r.strict = true;
    r.contribution = on_strict;
  } else if (r.margin >= -tol) {
    r.strict = false;
    r.contribution = on_equal;
  } else {
    r.strict = false;
    r.contribution = Contribution::None;
  }
}

CriterionReport not_applicable(const std::string& id, const std::string& why,
                               bool advisory = false) {
  CriterionReport r;
  r.id = id;
  r.applicable = false;
  r.note = why;
  r.contribution = Contribution::None;
  r.advisory = advisory;
  return r;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

const char* to_string(Contribution c) {
  switch (c) {
    case Contribution::StrictlyStable: return "StrictlyStable";
    case Contribution::Stable: return "Stable";
    default: return "None";
  }
}

const char* to_string(Overall o) {
  switch (o) {
    case Overall::StrictlyStable: return "StrictlyStable";
    case Overall::Stable: return "Stable";
    case Overall::Unstable: return "Unstable";
    default: return "Inconclusive";
  }
}

CriterionReport koiso_criterion(const ManifoldModel& m) {
  return koiso_criterion(m, eigen_functions(m));
}

CriterionReport koiso_criterion(const ManifoldModel& m, const SpectralSummary& s) {
  CriterionReport r;
  r.id = "koiso";
  r.threshold = std::max(-m.mu, 0.5 * m.mu) + 0.0;
  r.measured = s.r_sup;
  classify(r, Contribution::StrictlyStable, Contribution::Stable);
  return r;
}

CriterionReport weyl_sup_criterion(const ManifoldModel& m) {
  return weyl_sup_criterion(m, eigen_functions(m));
}

CriterionReport weyl_sup_criterion(const ManifoldModel& m, const SpectralSummary& s) {
  const int n = m.dim;
  CriterionReport r;
  r.id = "weyl_sup";
  r.threshold = std::max(m.mu * (n + 1) / (2.0 * (n - 1)), -m.mu * (n - 2) / (n - 1.0));
  r.measured = s.w_sup;
  r.lower_bound = std::max(2.0 * m.mu * (n + 1) / (n - 1.0) - 4.0 * s.w_sup,
                           -m.mu * (n - 2) / (n - 1.0) - s.w_sup);
  classify(r, Contribution::StrictlyStable, Contribution::Stable);
  return r;
}

double weyl_integral_lower_bound(int n, double mu_unit, double w_lq) {
  const double sob = 8.0 * (n - 1) / (mu_unit * n * (n - 2));
  return 2.0 * (1.0 - sob * w_lq) * (mu_unit * n / (n - 1.0) - w_lq) /
             (1.0 + sob * w_lq) +
         2.0 * (mu_unit / (n - 1.0) - w_lq);
}

CriterionReport weyl_integral_criterion(const ManifoldModel& m) {
  return weyl_integral_criterion(m, eigen_functions(m));
}

CriterionReport weyl_integral_criterion(const ManifoldModel& m, const SpectralSummary& s) {
  const int n = m.dim;
  if (n < 3) throw input_error("weyl_integral_criterion: unsupported dimension");
  if (m.mu <= 0.0)
    return not_applicable("weyl_integral", "requires a positive Einstein constant");

  const double vol_pow = std::pow(m.volume, 2.0 / n);
  CriterionReport r;
  r.id = "weyl_integral";
  r.threshold = m.mu * vol_pow * (n + 1) / (2.0 * (n - 1)) /
                (4.0 * (n - 1) / (n * (n - 2.0)) + 1.0);
  r.measured = s.w_lq;
  r.lower_bound = weyl_integral_lower_bound(n, m.mu * vol_pow, s.w_lq);
  r.yamabe = n * m.mu * vol_pow;  // every Einstein metric minimizes its conformal class
  classify(r, Contribution::StrictlyStable, Contribution::Stable);
  return r;
}

CriterionReport six_dim_euler_criterion(const ManifoldModel& m) {
  if (m.dim != 6) return not_applicable("thm_1_6", "requires dimension 6");
  if (m.mu <= 0.0) return not_applicable("thm_1_6", "requires a positive Einstein constant");
  if (!m.euler_char)
    return not_applicable("thm_1_6", "requires a known Euler characteristic");

  // The statement fixes vol = 1; rescale internally.
  const double c = std::pow(m.volume, -1.0 / 3.0);
  const ManifoldModel unit = rescale(m, c);

  const CurvatureDecomposition dec = curvature_decompose(unit.curvature);
  const double tr_what3 = cubic_invariants(dec.weyl).tr_hat3;

  CriterionReport r;
  r.id = "thm_1_6";
  r.measured = (1.0 / 25.0) * (144.0 - 12.0 * 49.0 * 9.0 / (5.0 * 121.0)) *
               std::pow(unit.mu, 3);
  r.threshold = 384.0 * std::pow(kPi, 3) * *m.euler_char - 48.0 * tr_what3;
  r.note = "evaluated at unit volume (rescale factor " + format_number(c) + ")";
  classify(r, Contribution::StrictlyStable, Contribution::StrictlyStable);
  return r;
}

CriterionReport pinching_criterion(const ManifoldModel& m) {
  return pinching_criterion(m, eigen_functions(m));
}

CriterionReport pinching_criterion(const ManifoldModel& m, const SpectralSummary& s) {
  const int n = m.dim;
  CriterionReport r;
  r.advisory = true;
  r.id = "pinching";
  if (s.sectional_max < -1e-12) {
    // negative sectional curvature
    r.threshold = 0.0;
    r.measured = s.sectional_max;
    classify(r, Contribution::StrictlyStable, Contribution::None);
    r.note = "negative sectional curvature (sampled)";
    return r;
  }
  if (s.sectional_max <= 1e-12) {
    r.threshold = 0.0;
    r.measured = 0.0;
    r.margin = 0.0;
    r.contribution = Contribution::None;
    r.note = "sectional curvature not negative and not positively pinched";
    return r;
  }
  // normalize the maximum to 1 and ask for pinching above (n-2)/(3n)
  r.threshold = s.sectional_min / s.sectional_max;
  r.measured = (n - 2) / (3.0 * n);
  classify(r, Contribution::StrictlyStable, Contribution::None);
  r.note = "pinching ratio vs (n-2)/(3n), sampled bounds";
  return r;
}

std::vector<CriterionReport> isolation_checks(const ManifoldModel& m) {
  std::vector<CriterionReport> out;
  const int n = m.dim;

  {
    CriterionReport r;
    r.id = "isolation_weyl_lnhalf";
    r.advisory = true;
    if (m.mu <= 0.0 || n < 4) {
      r = not_applicable("isolation_weyl_lnhalf",
                         "requires a positive Einstein constant and dimension >= 4", true);
    } else {
      const double vol_pow = std::pow(m.volume, 2.0 / n);
      const CurvatureDecomposition dec = curvature_decompose(m.curvature);
      const double coeff = (n <= 9) ? n * (n - 2) / (24.0 * (n - 1)) : 1.0 / 3.0;
      r.threshold = coeff * m.mu * vol_pow;
      r.measured = std::sqrt(dec.weyl.norm_sq()) * vol_pow;
      r.margin = r.threshold - r.measured;
      r.strict = false;
      r.contribution = Contribution::None;
      r.note = (r.margin >= 0.0)
                   ? "below the isolation threshold: the Weyl tensor must vanish"
                   : "above the isolation threshold: no conclusion";
    }
    out.push_back(std::move(r));
  }

  {
    CriterionReport r;
    r.id = "isolation_gursky_lebrun";
    r.advisory = true;
    if (n != 4 || m.mu <= 0.0) {
      r = not_applicable("isolation_gursky_lebrun",
                         "requires dimension 4 and a positive Einstein constant", true);
    } else {
      const CurvatureDecomposition dec = curvature_decompose(m.curvature);
      const DualSplit split = dual_split(dec.weyl);
      double tr_plus_sq = 0.0;
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) tr_plus_sq += split.plus.matrix(a, b) * split.plus.matrix(a, b);
      r.measured = 4.0 * tr_plus_sq * m.volume;  // integral of |W+|^2
      r.threshold = (8.0 / 3.0) * m.mu * m.mu * m.volume;
      r.margin = r.threshold - r.measured;
      r.strict = false;
      r.contribution = Contribution::None;
      r.note = (r.margin > equality_tol(r.threshold, r.measured))
                   ? "self-dual energy below the gap: W+ must vanish identically"
                   : "self-dual energy at or above the gap";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<InstabilityWitness> product_instability_witness(const ManifoldModel& m) {
  if (!m.product_dims || m.mu <= 0.0) return std::nullopt;
  const auto [na, nb] = *m.product_dims;
  const int n = m.dim;

  InstabilityWitness w;
  w.direction = Sym2(n);
  for (int i = 0; i < na; ++i) w.direction(i, i) = static_cast<double>(nb);
  for (int i = na; i < n; ++i) w.direction(i, i) = -static_cast<double>(na);

  // The direction is parallel, so the quadratic form reduces to
  // -2 <R°h, h> / |h|^2, which equals -2 mu by the block structure.
  const Sym2 rh = apply_curvature_action(m.curvature, w.direction);
  double inner = 0.0;
  for (size_t i = 0; i < rh.v.size(); ++i) inner += rh.v[i] * w.direction.v[i];
  w.quadratic_form_value = -2.0 * inner / w.direction.norm_sq();
  return w;
}

std::vector<CriterionReport> kahler_criteria(const ManifoldModel& m) {
  std::vector<CriterionReport> out;
  if (!m.complex_structure) {
    out.push_back(not_applicable("kahler_sup", "model carries no complex structure"));
    out.push_back(not_applicable("kahler_integral", "model carries no complex structure"));
    out.push_back(not_applicable("kahler_negative", "model carries no complex structure"));
    out.push_back(not_applicable("kahler_nonpositive", "model carries no complex structure"));
    return out;
  }

  const int n = m.dim;
  const KahlerSpectra ks = kahler_spectra(m);

  if (m.mu > 0.0) {
    CriterionReport a;
    a.id = "kahler_sup";
    a.threshold = m.mu * (n - 2) / (2.0 * (n + 2));
    a.measured = ks.b_sup;
    classify(a, Contribution::Stable, Contribution::Stable);
    out.push_back(std::move(a));

    CriterionReport b;
    b.id = "kahler_integral";
    b.threshold = m.mu * std::pow(m.volume, 2.0 / n) * (n - 2) / (2.0 * (n + 2)) /
                  (4.0 * (n - 1) / (n * (n + 2.0)) + 1.0);
    b.measured = ks.b_lq;
    classify(b, Contribution::Stable, Contribution::Stable);
    out.push_back(std::move(b));
  } else {
    out.push_back(
        not_applicable("kahler_sup", "requires a positive Einstein constant"));
    out.push_back(
        not_applicable("kahler_integral", "requires a positive Einstein constant"));
  }

  if (m.mu < 0.0) {
    CriterionReport c;
    c.id = "kahler_negative";
    c.threshold = -m.mu * (n - 2) / (n + 2.0);
    c.measured = ks.bplus_sup;
    classify(c, Contribution::StrictlyStable, Contribution::None);
    out.push_back(std::move(c));
  } else {
    out.push_back(
        not_applicable("kahler_negative", "requires a negative Einstein constant"));
  }

  if (m.mu <= 0.0) {
    CriterionReport d;
    d.id = "kahler_nonpositive";
    d.contribution = Contribution::Stable;
    d.note = "Kahler-Einstein with nonpositive constant is unconditionally stable";
    out.push_back(std::move(d));
  } else {
    out.push_back(
        not_applicable("kahler_nonpositive", "requires a nonpositive Einstein constant"));
  }
  return out;
}

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = {
      "koiso",      "weyl_sup",       "weyl_integral",  "thm_1_6",
      "pinching",   "isolation",      "kahler_sup",     "kahler_integral",
      "kahler_negative", "kahler_nonpositive"};
  return ids;
}

StabilityReport evaluate_all(const ManifoldModel& m, const EvaluateOptions& opts) {
  require_valid(m);
  if (m.dim < 3)
    throw input_error("evaluate_all: stability criteria need dimension >= 3");

  auto selected = [&opts](const std::string& id) {
    if (opts.criteria_filter.empty()) return true;
    const std::string group = (id.rfind("isolation", 0) == 0) ? "isolation" : id;
    return std::find(opts.criteria_filter.begin(), opts.criteria_filter.end(), group) !=
           opts.criteria_filter.end();
  };
  for (const auto& id : opts.criteria_filter)
    if (std::find(criterion_ids().begin(), criterion_ids().end(), id) ==
        criterion_ids().end())
      throw input_error("unknown criterion id '" + id + "'", "criteria");

  const SpectralSummary spectra = eigen_functions(m, opts.sectional_samples, opts.seed);

  StabilityReport rep;
  rep.model_name = m.name;
  if (selected("koiso")) rep.criteria.push_back(koiso_criterion(m, spectra));
  if (selected("weyl_sup")) rep.criteria.push_back(weyl_sup_criterion(m, spectra));
  if (selected("weyl_integral"))
    rep.criteria.push_back(weyl_integral_criterion(m, spectra));
  if (selected("thm_1_6")) rep.criteria.push_back(six_dim_euler_criterion(m));
  if (selected("pinching")) rep.criteria.push_back(pinching_criterion(m, spectra));
  if (selected("isolation"))
    for (auto& r : isolation_checks(m)) rep.criteria.push_back(std::move(r));
  if (m.complex_structure) {
    for (auto& r : kahler_criteria(m))
      if (selected(r.id)) rep.criteria.push_back(std::move(r));
  }

  rep.witness = product_instability_witness(m);
  if (rep.witness) {
    rep.overall = Overall::Unstable;
    return rep;
  }

  rep.overall = Overall::Inconclusive;
  for (const auto& c : rep.criteria) {
    if (c.advisory) continue;
    if (c.contribution == Contribution::StrictlyStable) {
      rep.overall = Overall::StrictlyStable;
      break;
    }
    if (c.contribution == Contribution::Stable) rep.overall = Overall::Stable;
  }
  return rep;
}

}  // namespace einstab

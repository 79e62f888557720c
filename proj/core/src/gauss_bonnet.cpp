#include "einstab/gauss_bonnet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "einstab/errors.hpp"
#include "einstab/operators.hpp"

namespace einstab {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct SignedPermutations {
  std::vector<std::vector<int>> perms;  // lexicographic order
  std::vector<double> signs;
};

SignedPermutations all_permutations(int n) {
  SignedPermutations out;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    out.perms.push_back(p);
    out.signs.push_back(inversions % 2 == 0 ? 1.0 : -1.0);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Fixed-order pairwise tree reduction, so the floating-point result does
// not depend on how the partials might be produced.
double tree_sum(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  while (xs.size() > 1) {
    std::vector<double> next;
    next.reserve(xs.size() / 2 + 1);
    for (size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(xs[i] + xs[i + 1]);
    if (xs.size() % 2 == 1) next.push_back(xs.back());
    xs = std::move(next);
  }
  return xs[0];
}

double chi_normalization(int n, double psi_times_vol) {
  const int m = n / 2;
  double m_fact = 1.0;
  for (int i = 2; i <= m; ++i) m_fact *= i;
  const double coeff = ((m % 2 == 0) ? 1.0 : -1.0) /
                       (std::pow(2.0, 3.0 * m) * std::pow(kPi, m) * m_fact);
  return coeff * psi_times_vol;
}

double ricci_cubed_trace(const Sym2& ric) {
  const int n = ric.dim;
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) s += ric(i, j) * ric(i, k) * ric(k, j);
  return s;
}

}  // namespace

double pfaffian_integrand(const Curv4& t) {
  const int n = t.dim;
  if (n % 2 != 0) throw input_error("pfaffian_integrand: dimension must be even");
  if (n > 6)
    throw input_error("pfaffian_integrand: dimension above 6 exceeds the (n!)^2 budget");
  validate_curvature(t, /*with_bianchi=*/false, "pfaffian_integrand input");

  const int m = n / 2;
  const SignedPermutations sp = all_permutations(n);
  const size_t count = sp.perms.size();
  const size_t n2 = static_cast<size_t>(n) * n;

  // Per permutation: the flattened (pair) indices of its m index pairs.
  std::vector<size_t> pair_index(count * static_cast<size_t>(m));
  for (size_t p = 0; p < count; ++p)
    for (int a = 0; a < m; ++a)
      pair_index[p * m + a] = static_cast<size_t>(sp.perms[p][2 * a]) * n +
                              static_cast<size_t>(sp.perms[p][2 * a + 1]);

  std::vector<double> partials(count);
  for (size_t s = 0; s < count; ++s) {
    const size_t* srow = &pair_index[s * m];
    double acc = 0.0;
    for (size_t u = 0; u < count; ++u) {
      const size_t* trow = &pair_index[u * m];
      double prod = sp.signs[u];
      for (int a = 0; a < m; ++a) prod *= t.v[srow[a] * n2 + trow[a]];
      acc += prod;
    }
    partials[s] = sp.signs[s] * acc;
  }
  return tree_sum(std::move(partials));
}

double chi_from_pfaffian(const ManifoldModel& m) {
  return chi_normalization(m.dim, pfaffian_integrand(m.curvature) * m.volume);
}

double dim4_chi_density(const Curv4& t) {
  if (t.dim != 4) throw input_error("dim4_chi_density: dimension must be 4");
  const CurvatureDecomposition d = curvature_decompose(t);
  return (d.weyl.norm_sq() + d.scalar_part.norm_sq() - d.traceless_ricci.norm_sq()) /
         (32.0 * kPi * kPi);
}

double dim6_chi_density(const Curv4& t) {
  if (t.dim != 6) throw input_error("dim6_chi_density: dimension must be 6");
  const Contraction c = contract(t);
  const CubicInvariants cub = cubic_invariants(t);
  const int n = 6;

  double ric_pair = 0.0;   // Ric^ij Ric^kl R_ikjl
  double ric_riem = 0.0;   // Ric_i^j R^iklm R_jklm
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double riem_ij = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          ric_pair += c.ric(i, j) * c.ric(k, l) * t(i, k, j, l);
          for (int mm = 0; mm < n; ++mm) riem_ij += t(i, k, l, mm) * t(j, k, l, mm);
        }
      ric_riem += c.ric(i, j) * riem_ij;
    }

  const double integrand = std::pow(c.scal, 3) - 12.0 * c.scal * c.ric.norm_sq() +
                           3.0 * c.scal * c.norm_sq + 16.0 * ricci_cubed_trace(c.ric) -
                           24.0 * ric_pair - 24.0 * ric_riem + 8.0 * cub.c1 - 2.0 * cub.c2;
  return integrand / (384.0 * std::pow(kPi, 3));
}

GaussBonnetReport euler_dim4(const ManifoldModel& m) {
  if (m.dim != 4) throw input_error("euler_dim4: model dimension must be 4");
  GaussBonnetReport rep;
  rep.dim = 4;
  rep.mu = m.mu;
  rep.chi_expected = m.euler_char;

  const CurvatureDecomposition d = curvature_decompose(m.curvature);
  rep.weyl_norm_sq = d.weyl.norm_sq();
  rep.scalar_part_norm_sq = d.scalar_part.norm_sq();
  rep.traceless_ricci_norm_sq = d.traceless_ricci.norm_sq();
  rep.riemann_norm_sq = m.curvature.norm_sq();
  rep.grad_weyl_sq_integral = m.is_symmetric ? std::optional<double>(0.0) : std::nullopt;

  rep.chi_explicit = dim4_chi_density(m.curvature) * m.volume;
  rep.chi_pfaffian = chi_from_pfaffian(m);
  rep.berger_nonnegative = rep.chi_explicit >= -1e-9;
  return rep;
}

GaussBonnetReport euler_dim6(const ManifoldModel& m, std::optional<double> grad_weyl_sq) {
  if (m.dim != 6) throw input_error("euler_dim6: model dimension must be 6");
  GaussBonnetReport rep;
  rep.dim = 6;
  rep.mu = m.mu;
  rep.chi_expected = m.euler_char;

  const CurvatureDecomposition d = curvature_decompose(m.curvature);
  rep.weyl_norm_sq = d.weyl.norm_sq();
  rep.scalar_part_norm_sq = d.scalar_part.norm_sq();
  rep.traceless_ricci_norm_sq = d.traceless_ricci.norm_sq();
  rep.riemann_norm_sq = m.curvature.norm_sq();

  const CubicInvariants cub = cubic_invariants(m.curvature);
  rep.c1 = cub.c1;
  rep.c2 = cub.c2;
  rep.tr_what3 = cubic_invariants(d.weyl).tr_hat3;

  const double denom = 384.0 * std::pow(kPi, 3);
  rep.chi_sakai = dim6_chi_density(m.curvature) * m.volume;
  rep.chi_einstein_form =
      (24.0 * std::pow(m.mu, 3) - 6.0 * m.mu * rep.riemann_norm_sq + 8.0 * cub.c1 -
       2.0 * cub.c2) *
      m.volume / denom;

  if (m.is_symmetric)
    rep.grad_weyl_sq_integral = 0.0;
  else if (grad_weyl_sq)
    rep.grad_weyl_sq_integral = *grad_weyl_sq;

  if (rep.grad_weyl_sq_integral) {
    rep.chi_weyl_form = ((-14.0 / 5.0) * m.mu * rep.weyl_norm_sq * m.volume -
                         2.0 * *rep.grad_weyl_sq_integral +
                         (144.0 / 25.0) * std::pow(m.mu, 3) * m.volume +
                         48.0 * rep.tr_what3 * m.volume) /
                        denom;
  }

  rep.chi_explicit = *rep.chi_sakai;
  rep.chi_pfaffian = chi_from_pfaffian(m);
  return rep;
}

double sakai_identity_residual(const ManifoldModel& m) {
  if (!m.is_symmetric)
    throw input_error("sakai_identity_residual: model must have parallel curvature");
  const CubicInvariants cub = cubic_invariants(m.curvature);
  return 4.0 * cub.c1 + 2.0 * cub.c2 + 2.0 * m.mu * m.curvature.norm_sq();
}

}  // namespace einstab

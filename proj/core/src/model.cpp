#include "einstab/model.hpp"

#include <cmath>
#include <cstdio>

#include "einstab/errors.hpp"

namespace einstab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

double round_sphere_volume(int n, double k) {
  // Unit sphere volume 2 pi^{(n+1)/2} / Gamma((n+1)/2), radius 1/sqrt(K).
  const double half = 0.5 * (n + 1);
  return 2.0 * std::pow(kPi, half) / std::tgamma(half) * std::pow(k, -0.5 * n);
}

DMatrix standard_complex_structure(int n) {
  DMatrix j(n, n);
  for (int k = 0; k + 1 < n; k += 2) {
    j(k + 1, k) = 1.0;   // J e_{2k}   =  e_{2k+1}
    j(k, k + 1) = -1.0;  // J e_{2k+1} = -e_{2k}
  }
  return j;
}

}  // namespace

AntiSym2 kahler_form(const DMatrix& j) {
  const int n = j.rows;
  AntiSym2 w(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) w(a, b) = j(b, a);  // omega(e_a, e_b) = (J e_a) . e_b
  return w;
}

ManifoldModel make_space_form(int n, double curvature_k, std::optional<double> volume) {
  if (n < 2) throw input_error("make_space_form: dimension must be at least 2", "dim");
  if (curvature_k <= 0.0 && !volume)
    throw input_error(
        "make_space_form: volume is required for curvature <= 0 (compact quotient)",
        "volume");
  if (volume && *volume <= 0.0)
    throw input_error("make_space_form: volume must be positive", "volume");

  ManifoldModel m;
  m.dim = n;
  m.mu = (n - 1) * curvature_k;
  const Sym2 g = Sym2::metric(n);
  m.curvature = (0.5 * curvature_k) * kulkarni_nomizu(g, g);
  m.is_symmetric = true;

  if (curvature_k > 0.0) {
    const bool default_volume = !volume;
    m.volume = volume ? *volume : round_sphere_volume(n, curvature_k);
    if (default_volume)
      m.euler_char = (n % 2 == 0) ? 2 : 0;
    else if (n % 2 == 1)
      m.euler_char = 0;  // closed odd-dimensional manifolds
    m.name = (curvature_k == 1.0) ? "S^" + std::to_string(n)
                                  : "S^" + std::to_string(n) + "(K=" + format_number(curvature_k) + ")";
    if (!default_volume) m.name += "/G";
  } else if (curvature_k == 0.0) {
    m.volume = *volume;
    m.euler_char = 0;
    m.name = "T^" + std::to_string(n);
  } else {
    m.volume = *volume;
    if (n % 2 == 1) m.euler_char = 0;
    m.name = (curvature_k == -1.0)
                 ? "H^" + std::to_string(n)
                 : "H^" + std::to_string(n) + "(K=" + format_number(curvature_k) + ")";
  }
  return m;
}

ManifoldModel make_cpn(int m_complex) {
  if (m_complex < 1) throw input_error("make_cpn: complex dimension must be at least 1", "complex_dim");
  if (m_complex > 4)
    throw input_error("make_cpn: complex dimension above 4 exceeds the supported frame size",
                      "complex_dim");
  const int n = 2 * m_complex;

  ManifoldModel m;
  m.dim = n;
  m.mu = 2.0 * m_complex + 2.0;
  m.complex_structure = standard_complex_structure(n);
  const AntiSym2 w = kahler_form(*m.complex_structure);
  const Sym2 g = Sym2::metric(n);

  // Constant holomorphic sectional curvature 4:
  //   R = 1/2 (g (x) g) + 1/2 (w (x) w) - 2 (w o w).
  m.curvature = 0.5 * kulkarni_nomizu(g, g) + 0.5 * kn_components(n, w.v, w.v) -
                2.0 * pair_product(w, w);

  double factorial = 1.0;
  for (int i = 2; i <= m_complex; ++i) factorial *= i;
  m.volume = std::pow(kPi, m_complex) / factorial;
  m.euler_char = m_complex + 1;
  m.is_symmetric = true;
  m.name = "CP^" + std::to_string(m_complex);
  return m;
}

ManifoldModel make_product(const ManifoldModel& a, const ManifoldModel& b, bool auto_rescale) {
  ManifoldModel second = b;
  if (auto_rescale) {
    const bool both_zero = a.mu == 0.0 && b.mu == 0.0;
    if (!both_zero) {
      if (a.mu * b.mu <= 0.0)
        throw input_error(
            "make_product: auto_rescale requires Einstein constants of the same sign",
            "auto_rescale");
      second = rescale(b, b.mu / a.mu);
    }
  } else if (std::fabs(a.mu - b.mu) > 1e-10 * std::max(std::fabs(a.mu), 1.0)) {
    throw input_error(
        "make_product: factors have different Einstein constants (" +
            format_number(a.mu) + " vs " + format_number(b.mu) +
            "); pass auto_rescale to match them",
        "auto_rescale");
  }

  const int na = a.dim;
  const int nb = second.dim;
  ManifoldModel m;
  m.dim = na + nb;
  m.mu = a.mu;
  m.volume = a.volume * second.volume;
  m.is_symmetric = a.is_symmetric && second.is_symmetric;
  m.product_dims = std::make_pair(na, nb);
  if (a.euler_char && second.euler_char) m.euler_char = *a.euler_char * *second.euler_char;

  m.curvature = Curv4(m.dim);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < na; ++l) m.curvature(i, j, k, l) = a.curvature(i, j, k, l);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l)
          m.curvature(na + i, na + j, na + k, na + l) = second.curvature(i, j, k, l);

  if (a.complex_structure && second.complex_structure) {
    DMatrix j(m.dim, m.dim);
    for (int r = 0; r < na; ++r)
      for (int c = 0; c < na; ++c) j(r, c) = (*a.complex_structure)(r, c);
    for (int r = 0; r < nb; ++r)
      for (int c = 0; c < nb; ++c) j(na + r, na + c) = (*second.complex_structure)(r, c);
    m.complex_structure = j;
  }

  m.name = a.name + " x " + second.name;
  return m;
}

ManifoldModel rescale(const ManifoldModel& m, double c) {
  if (!(c > 0.0)) throw input_error("rescale: factor must be positive");
  if (c == 1.0) return m;
  ManifoldModel out = m;
  // g -> c g: the orthonormal frame contracts by sqrt(c), so the (0,4)
  // curvature components pick up a factor 1/c.
  out.curvature *= 1.0 / c;
  out.mu = m.mu / c;
  out.volume = m.volume * std::pow(c, 0.5 * m.dim);
  return out;
}

ManifoldModel make_custom(const std::string& name, int dim,
                          const std::vector<double>& curvature_components, double volume,
                          std::optional<int> euler_char,
                          const std::optional<std::vector<double>>& complex_structure) {
  if (dim < 2 || dim > 8)
    throw input_error("custom model: dimension must be between 2 and 8", "dim");
  const size_t expect = static_cast<size_t>(dim) * dim * dim * dim;
  if (curvature_components.size() != expect)
    throw input_error("custom model: curvature needs " + std::to_string(expect) +
                          " components (flat row-major), got " +
                          std::to_string(curvature_components.size()),
                      "curvature");
  if (!(volume > 0.0)) throw input_error("custom model: volume must be positive", "volume");

  ManifoldModel m;
  m.name = name;
  m.dim = dim;
  m.curvature = Curv4(dim);
  m.curvature.v = curvature_components;
  validate_curvature(m.curvature, /*with_bianchi=*/true, "custom curvature");
  const Contraction c = contract(m.curvature);
  m.mu = c.scal / dim;
  m.volume = volume;
  m.euler_char = euler_char;
  m.is_symmetric = false;
  if (complex_structure) {
    if (complex_structure->size() != static_cast<size_t>(dim) * dim)
      throw input_error("custom model: complex_structure needs dim x dim entries",
                        "complex_structure");
    DMatrix j(dim, dim);
    j.v = *complex_structure;
    m.complex_structure = j;
  }
  require_valid(m);
  return m;
}

ValidationReport validate(const ManifoldModel& m) {
  ValidationReport rep;
  auto add = [&rep](const std::string& name, double residual, double tol) {
    rep.checks.push_back({name, residual <= tol, residual, tol});
  };

  const CurvatureResiduals res = curvature_residuals(m.curvature, /*with_bianchi=*/true);
  add("curvature antisymmetry (first pair)", res.antisym_first, 1e-12);
  add("curvature antisymmetry (second pair)", res.antisym_second, 1e-12);
  add("curvature pair symmetry", res.pair, 1e-12);
  add("first Bianchi identity", res.bianchi, 1e-10);

  // Einstein condition Ric = mu g.
  double einstein_res = 0.0;
  {
    const int n = m.dim;
    Sym2 ric(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += m.curvature(i, j, k, i);
        ric(j, k) = s;
      }
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        einstein_res = std::max(einstein_res,
                                std::fabs(ric(j, k) - (j == k ? m.mu : 0.0)));
  }
  add("Einstein condition Ric = mu g", einstein_res, 1e-10);

  add("volume positivity", m.volume > 0.0 ? 0.0 : 1.0, 0.5);

  if (m.complex_structure) {
    const DMatrix& j = *m.complex_structure;
    double ortho = 0.0, square = 0.0, kahler = 0.0;
    const int n = m.dim;
    if (n % 2 != 0) {
      add("complex structure on even-dimensional frame", 1.0, 0.5);
    } else {
      const DMatrix jtj = matmul(transpose(j), j);
      const DMatrix jj = matmul(j, j);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          ortho = std::max(ortho, std::fabs(jtj(r, c) - (r == c ? 1.0 : 0.0)));
          square = std::max(square, std::fabs(jj(r, c) + (r == c ? 1.0 : 0.0)));
        }
      add("J orthogonality", ortho, 1e-10);
      add("J^2 = -id", square, 1e-10);

      // R(JX, JY, Z, V) = R(X, Y, Z, V) on all frame 4-tuples.
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            for (int v = 0; v < n; ++v) {
              double rot = 0.0;
              for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                  rot += j(p, x) * j(q, y) * m.curvature(p, q, z, v);
              kahler = std::max(kahler, std::fabs(rot - m.curvature(x, y, z, v)));
            }
      add("Kahler curvature identity", kahler, 1e-10);
    }
  }
  return rep;
}

void require_valid(const ManifoldModel& m) {
  const ValidationReport rep = validate(m);
  for (const auto& c : rep.checks)
    if (!c.passed) {
      char buf[192];
      std::snprintf(buf, sizeof(buf), "model '%s' failed check '%s' (residual %.3e > %.1e)",
                    m.name.c_str(), c.name.c_str(), c.residual, c.tolerance);
      throw input_error(buf);
    }
}

ManifoldModel build_model(const ManifoldSpec& spec) {
  return std::visit(
      [](const auto& s) -> ManifoldModel {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SpaceFormSpec>) {
          return make_space_form(s.dim, s.curvature, s.volume);
        } else if constexpr (std::is_same_v<T, CpnSpec>) {
          return make_cpn(s.complex_dim);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          if (s.factors.size() < 2)
            throw input_error("product spec needs at least two factors", "factors");
          ManifoldModel acc = build_model(s.factors[0]);
          for (size_t i = 1; i < s.factors.size(); ++i)
            acc = make_product(acc, build_model(s.factors[i]), s.auto_rescale);
          return acc;
        } else {
          return make_custom(s.name.value_or("custom"), s.dim, s.curvature, s.volume,
                             s.euler_char, s.complex_structure);
        }
      },
      spec.value);
}

std::optional<double> spec_grad_weyl_sq(const ManifoldSpec& spec) {
  if (const auto* custom = std::get_if<CustomSpec>(&spec.value)) return custom->grad_weyl_sq;
  return std::nullopt;
}

}  // namespace einstab

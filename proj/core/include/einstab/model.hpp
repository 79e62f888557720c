#ifndef EINSTAB_MODEL_HPP
#define EINSTAB_MODEL_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "einstab/linalg.hpp"
#include "einstab/tensor.hpp"

namespace einstab {

/// A homogeneous Einstein model, represented by its basepoint data in an
/// orthonormal frame.  One fiber determines everything: all integrals over
/// the manifold are pointwise values times the volume.
struct ManifoldModel {
  std::string name;
  int dim = 0;
  double mu = 0.0;    // Einstein constant, Ric = mu * g
  Curv4 curvature;    // basepoint curvature tensor
  double volume = 0.0;
  std::optional<int> euler_char;
  std::optional<DMatrix> complex_structure;  // orthogonal J with J^2 = -id
  bool is_symmetric = false;                 // parallel curvature (all built-ins)

  // Factor dimensions when built by make_product (outermost split); used by
  // the product instability witness.
  std::optional<std::pair<int, int>> product_dims;
};

/// Fundamental 2-form of J in the frame, omega(X,Y) = g(JX, Y).
AntiSym2 kahler_form(const DMatrix& j);

/// Constant-curvature space form: round sphere (K > 0), flat torus (K = 0)
/// or hyperbolic quotient (K < 0).  For K > 0 the round-sphere volume
/// 2 pi^{(n+1)/2} / Gamma((n+1)/2) * K^{-n/2} is used when none is given;
/// for K <= 0 the volume is required (compact quotients exist for any).
ManifoldModel make_space_form(int n, double curvature_k,
                              std::optional<double> volume = std::nullopt);

/// Complex projective space of complex dimension m with the Fubini-Study
/// metric normalized to holomorphic sectional curvature 4, so mu = 2m+2,
/// vol = pi^m / m!, chi = m+1.
ManifoldModel make_cpn(int m);

/// Riemannian product with block-diagonal curvature.  Einstein requires
/// equal constants; with auto_rescale the second factor is rescaled to
/// match the first.
ManifoldModel make_product(const ManifoldModel& a, const ManifoldModel& b,
                           bool auto_rescale = false);

/// Metric rescaling g -> c g in the orthonormal-frame representation:
/// curvature components divide by c, mu -> mu/c, volume -> c^{n/2} volume.
ManifoldModel rescale(const ManifoldModel& m, double c);

/// Model from user-supplied curvature components (validated).
ManifoldModel make_custom(const std::string& name, int dim,
                          const std::vector<double>& curvature_components,
                          double volume, std::optional<int> euler_char,
                          const std::optional<std::vector<double>>& complex_structure);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Runs every model invariant: curvature symmetries, first Bianchi,
/// Einstein condition, positivity of the volume and (when J is present)
/// orthogonality, J^2 = -id and the curvature J-invariance.
ValidationReport validate(const ManifoldModel& m);

/// validate() and throw input_error on the first failed check.
void require_valid(const ManifoldModel& m);

// ---------------------------------------------------------------------------
// Declarative manifold specs (the CLI input schema).

struct SpaceFormSpec {
  int dim = 0;
  double curvature = 0.0;
  std::optional<double> volume;
};

struct CpnSpec {
  int complex_dim = 0;
};

struct CustomSpec {
  int dim = 0;
  std::vector<double> curvature;  // flat row-major, n^4 components
  double volume = 0.0;
  std::optional<int> euler_char;
  std::optional<std::vector<double>> complex_structure;  // flat n x n
  std::optional<double> grad_weyl_sq;  // integral of |grad W|^2 for dim-6 reports
  std::optional<std::string> name;
};

struct ManifoldSpec;

struct ProductSpec {
  std::vector<ManifoldSpec> factors;  // folded left-associatively
  bool auto_rescale = false;
};

struct ManifoldSpec {
  std::variant<SpaceFormSpec, CpnSpec, ProductSpec, CustomSpec> value;
};

ManifoldModel build_model(const ManifoldSpec& spec);

/// grad_weyl_sq carried by a custom spec, if any (products and built-ins
/// are symmetric spaces, where it is zero).
std::optional<double> spec_grad_weyl_sq(const ManifoldSpec& spec);

}  // namespace einstab

#endif

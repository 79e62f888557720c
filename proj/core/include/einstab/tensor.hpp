#ifndef EINSTAB_TENSOR_HPP
#define EINSTAB_TENSOR_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace einstab {

/// Symmetric (0,2)-tensor at a point, components in an orthonormal frame.
/// The metric itself is Sym2::metric(n) (the identity array), so index
/// raising and lowering is trivial throughout.
struct Sym2 {
  int dim = 0;
  std::vector<double> v;  // n*n, row-major

  Sym2() = default;
  explicit Sym2(int n) : dim(n), v(static_cast<size_t>(n) * n, 0.0) {}

  double& operator()(int i, int j) { return v[static_cast<size_t>(i) * dim + j]; }
  double operator()(int i, int j) const { return v[static_cast<size_t>(i) * dim + j]; }

  static Sym2 metric(int n) {
    Sym2 g(n);
    for (int i = 0; i < n; ++i) g(i, i) = 1.0;
    return g;
  }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < dim; ++i) t += (*this)(i, i);
    return t;
  }

  /// Pointwise norm squared, full contraction sum_ij h_ij^2.
  double norm_sq() const {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
  }

  double max_abs() const;
  /// max |h_ij - h_ji|
  double symmetry_residual() const;
};

/// Antisymmetric (0,2)-tensor (e.g. the fundamental 2-form of a complex
/// structure), same storage layout as Sym2.
struct AntiSym2 {
  int dim = 0;
  std::vector<double> v;

  AntiSym2() = default;
  explicit AntiSym2(int n) : dim(n), v(static_cast<size_t>(n) * n, 0.0) {}

  double& operator()(int i, int j) { return v[static_cast<size_t>(i) * dim + j]; }
  double operator()(int i, int j) const { return v[static_cast<size_t>(i) * dim + j]; }

  double max_abs() const;
  /// max |a_ij + a_ji|
  double antisymmetry_residual() const;
};

/// Algebraic curvature-type (0,4)-tensor at a point, dense n^4 storage.
/// Expected symmetries: T_ijkl = -T_jikl = -T_ijlk = T_klij, and the
/// first Bianchi identity for genuine curvature tensors.
struct Curv4 {
  int dim = 0;
  std::vector<double> v;  // n^4, index ((i*n+j)*n+k)*n+l

  Curv4() = default;
  explicit Curv4(int n)
      : dim(n), v(static_cast<size_t>(n) * n * n * n, 0.0) {}

  double& operator()(int i, int j, int k, int l) {
    return v[(((static_cast<size_t>(i) * dim + j) * dim + k) * dim) + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return v[(((static_cast<size_t>(i) * dim + j) * dim + k) * dim) + l];
  }

  double max_abs() const;
  double norm_sq() const {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
  }

  Curv4& operator+=(const Curv4& o);
  Curv4& operator-=(const Curv4& o);
  Curv4& operator*=(double c);
};

Curv4 operator+(Curv4 a, const Curv4& b);
Curv4 operator-(Curv4 a, const Curv4& b);
Curv4 operator*(double c, Curv4 a);

/// Worst-offender residuals of the Curv4 symmetries.  Bianchi is listed
/// separately because it is only checked on demand.
struct CurvatureResiduals {
  double antisym_first = 0.0;   // T_ijkl + T_jikl
  double antisym_second = 0.0;  // T_ijkl + T_ijlk
  double pair = 0.0;            // T_ijkl - T_klij
  double bianchi = 0.0;         // T_ijkl + T_jkil + T_kijl
  int worst_index[4] = {0, 0, 0, 0};
  double worst_value = 0.0;

  double max_symmetry() const;
};

CurvatureResiduals curvature_residuals(const Curv4& t, bool with_bianchi);

/// Throws input_error naming the worst offending component if t does not
/// satisfy the curvature symmetries (1e-12) and, when requested, the
/// first Bianchi identity (1e-10).
void validate_curvature(const Curv4& t, bool with_bianchi = false,
                        const std::string& what = "curvature tensor");

/// Kulkarni-Nomizu product of symmetric (0,2)-tensors:
///   (h (x) k)_ijkl = h_il k_jk + h_jk k_il - h_ik k_jl - h_jl k_ik.
/// The same component formula applied to a pair of antisymmetric arrays
/// also yields a curvature-type tensor; kn_components covers both uses.
Curv4 kulkarni_nomizu(const Sym2& h, const Sym2& k);
Curv4 kn_components(int n, const std::vector<double>& a, const std::vector<double>& b);

/// Plain pair product (x (x) y)_ijkl = x_ij y_kl of two antisymmetric arrays.
Curv4 pair_product(const AntiSym2& x, const AntiSym2& y);

struct Contraction {
  Sym2 ric;        // ric_jk = sum_i T_ijki
  double scal;     // sum_j ric_jj
  double norm_sq;  // sum over all index tuples T_ijkl^2
};

/// Ricci contraction, scalar curvature and the full-sum norm.  Validates
/// the curvature symmetries (not Bianchi) before contracting.
Contraction contract(const Curv4& t);

struct CurvatureDecomposition {
  Curv4 weyl;            // totally trace-free part
  Curv4 scalar_part;     // scal/(2n(n-1)) g (x) g
  Curv4 traceless_ricci; // 1/(n-2) Ric0 (x) g
};

/// Orthogonal decomposition of an algebraic curvature tensor into Weyl,
/// scalar and traceless-Ricci parts.  Requires n >= 3.
CurvatureDecomposition curvature_decompose(const Curv4& t);

}  // namespace einstab

#endif

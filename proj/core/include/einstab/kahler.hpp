#ifndef EINSTAB_KAHLER_HPP
#define EINSTAB_KAHLER_HPP

#include <cstdint>
#include <utility>

#include "einstab/linalg.hpp"
#include "einstab/model.hpp"
#include "einstab/tensor.hpp"

namespace einstab {

/// Einstein-form Bochner tensor of a Kahler-Einstein model:
///   B = R - mu/(2(n+2)) { g(x)g + w(x)w - 4 w o w },
/// where w is the fundamental 2-form, the first two brackets use the
/// Kulkarni-Nomizu component formula and the last is the plain pair
/// product.  The result is validated: curvature symmetries, first Bianchi
/// and vanishing of every contraction trace.
Curv4 bochner_tensor(const ManifoldModel& m);

/// General (non-Einstein) Bochner formula from curvature, Ricci and scalar
/// data of a Kahler fiber; used to manufacture synthetic trace-free Kahler
/// tensors in validation paths.
Curv4 bochner_tensor_general(const Curv4& r, const DMatrix& j);

/// Splits a traceless symmetric tensor into its hermitian part
/// h1 = (h + J^T h J)/2 and skew-hermitian part h2 = h - h1.
std::pair<Sym2, Sym2> hermitian_split(const Sym2& h, const DMatrix& j);

/// Orthonormal bases (as coordinate columns in the Sym2 basis) of the
/// hermitian and skew-hermitian subspaces of traceless Sym2, built by
/// projecting the standard traceless basis and orthonormalizing
/// (modified Gram-Schmidt, drop tolerance 1e-10).
struct HermitianBases {
  DMatrix hermitian;       // N x (m^2 - 1)
  DMatrix skew_hermitian;  // N x m(m+1)
};
HermitianBases hermitian_subspace_bases(int n, const DMatrix& j);

struct KahlerSpectra {
  double b_sup = 0.0;      // top eigenvalue of the Bochner action on Sym2
  double bplus_sup = 0.0;  // top eigenvalue restricted to hermitian traceless tensors
  double b_lq = 0.0;       // b_sup * vol^{2/n}
};

KahlerSpectra kahler_spectra(const ManifoldModel& m);

/// Max relative residual, over seeded random traceless tensors, of the
/// pointwise identity relating the curvature and Bochner actions,
///   <R°h,h> = <B°h,h> - mu/(n+2) { |h|^2 - 3 sum h(e_i,e_j) h(Je_i,Je_j) },
/// together with its hermitian (+2mu/(n+2)) and skew-hermitian
/// (-4mu/(n+2)) specializations.
double decomposition_identity_check(const ManifoldModel& m, int trials,
                                    std::uint64_t seed);

}  // namespace einstab

#endif

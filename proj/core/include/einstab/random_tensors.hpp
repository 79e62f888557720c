#ifndef EINSTAB_RANDOM_TENSORS_HPP
#define EINSTAB_RANDOM_TENSORS_HPP

#include <cstdint>
#include <random>

#include "einstab/linalg.hpp"
#include "einstab/tensor.hpp"

namespace einstab {

using Rng = std::mt19937_64;

Sym2 random_sym2(int n, Rng& rng);
Sym2 random_traceless_sym2(int n, Rng& rng);

/// Random algebraic curvature tensor: a Gaussian array is symmetrized to
/// the pair symmetries and its totally antisymmetric part is removed, which
/// enforces the first Bianchi identity exactly.
Curv4 random_curvature(int n, Rng& rng);

/// Removes the totally antisymmetric (Bianchi-violating) part of a tensor
/// carrying the pair symmetries.
Curv4 remove_bianchi_defect(const Curv4& t);

/// Projects onto the pair symmetries (antisymmetric in both index pairs,
/// symmetric under pair exchange).
Curv4 symmetrize_pairs(const Curv4& t);

/// Random algebraic curvature tensor with the Kahler symmetry
/// T(JX,JY,.,.) = T, obtained by alternating the curvature and
/// J-invariance projections until both residuals vanish to 1e-13.
Curv4 random_kahler_curvature(int n, const DMatrix& j, Rng& rng);

/// Random Kahler-Einstein curvature tensor with prescribed Einstein
/// constant: a synthetic trace-free Bochner part (the general Bochner
/// formula applied to a random Kahler curvature tensor) plus the Einstein
/// part mu/(2(n+2)) {g(x)g + w(x)w - 4 w o w}.
Curv4 random_kahler_einstein(int n, double mu, const DMatrix& j, Rng& rng);

/// The Einstein part above, exposed so callers can separate or rescale the
/// Bochner component of a synthetic tensor.
Curv4 kahler_einstein_bracket(int n, double mu, const DMatrix& j);

}  // namespace einstab

#endif

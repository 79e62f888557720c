#ifndef EINSTAB_EIGENSOLVER_HPP
#define EINSTAB_EIGENSOLVER_HPP

#include <vector>

#include "einstab/linalg.hpp"

namespace einstab {

struct EigenResult {
  std::vector<double> values;  // ascending
  DMatrix vectors;             // column k pairs with values[k]; empty if not requested
};

/// Deterministic symmetric eigensolver: cyclic Jacobi sweeps in a fixed
/// (p,q) order, no pivot search randomness.  The matrix is normalized by
/// its largest entry and the sweep stops once every off-diagonal entry of
/// the normalized matrix is below 1e-14 (at most 100 sweeps).
///
/// Throws input_error if the matrix is not square-symmetric, numeric_error
/// if the sweep limit is exhausted before convergence.
EigenResult symmetric_eigen(const DMatrix& a, bool want_vectors = false);

/// Largest eigenvalue, shorthand for symmetric_eigen(a).values.back().
double top_eigenvalue(const DMatrix& a);

}  // namespace einstab

#endif

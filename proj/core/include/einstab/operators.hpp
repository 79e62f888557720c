#ifndef EINSTAB_OPERATORS_HPP
#define EINSTAB_OPERATORS_HPP

#include <utility>
#include <vector>

#include "einstab/linalg.hpp"
#include "einstab/tensor.hpp"

namespace einstab {

/// Matrix of a curvature action on symmetric 2-tensors, in the orthonormal
/// basis e_i(x)e_i (diagonal) and (e_i(x)e_j + e_j(x)e_i)/sqrt(2) for i<j,
/// ordered lexicographically on (i,j) with i<=j.
struct Sym2Operator {
  int dim = 0;     // frame dimension n
  DMatrix matrix;  // N x N with N = n(n+1)/2
};

/// Matrix of a curvature operator on 2-forms, basis e_i ^ e_j for i<j,
/// lexicographic.
struct Form2Operator {
  int dim = 0;     // frame dimension n
  DMatrix matrix;  // N x N with N = n(n-1)/2
};

/// Lexicographic (i,j) pairs, i<=j for the Sym2 basis.
std::vector<std::pair<int, int>> sym2_pairs(int n);
/// Lexicographic (i,j) pairs, i<j for the 2-form basis.
std::vector<std::pair<int, int>> form2_pairs(int n);

/// Coordinates of a symmetric tensor in the sym2_pairs basis.
std::vector<double> sym2_coordinates(const Sym2& h);
/// Inverse of sym2_coordinates.
Sym2 sym2_from_coordinates(int n, const std::vector<double>& coords);

/// Action of t on symmetric 2-tensors:
///   (t ° h)(X,Y) = sum_ij t(e_i, X, Y, e_j) h(e_j, e_i).
Sym2 apply_curvature_action(const Curv4& t, const Sym2& h);

/// Matrix of apply_curvature_action in the orthonormal Sym2 basis.
/// Applying it to the coordinates of the metric reproduces the Ricci
/// coordinates.
Sym2Operator sym2_operator(const Curv4& t);

/// Matrix of the induced operator on 2-forms; the entry for basis
/// elements (i<j), (k<l) is t(e_j, e_i, e_k, e_l).
Form2Operator form2_operator(const Curv4& t);

/// Reconstructs the (0,4)-tensor whose form2_operator is the given matrix.
Curv4 curv4_from_form2(const Form2Operator& op);

struct CubicInvariants {
  double c1;       // sum t_ijkl t_imkn t_jnlm
  double c2;       // sum t_ijkl t_ijmn t_klmn
  double tr_hat3;  // trace of the cube of the 2-form operator
};

/// Cubic curvature contractions entering the six-dimensional
/// Euler-characteristic formulas.  Satisfies -6 c2 == 48 tr_hat3.
CubicInvariants cubic_invariants(const Curv4& t);

/// Orthonormal basis of the trace-free subspace of Sym2, as coordinate
/// columns of an N x (N-1) matrix (the metric direction is dropped).
DMatrix traceless_sym2_basis(int n);

/// Self-dual / anti-self-dual split of a Weyl-type tensor in dimension 4.
/// Both outputs are 6x6 matrices supported on the +1 / -1 eigenspaces of
/// the Hodge star for the frame orientation e1^e2^e3^e4; their sum
/// reassembles the 2-form operator of w.
struct DualSplit {
  Form2Operator plus;
  Form2Operator minus;
};

DualSplit dual_split(const Curv4& w);

/// Hodge star on 2-forms in dimension 4 (form2_pairs basis).
DMatrix hodge_star_dim4();

}  // namespace einstab

#endif

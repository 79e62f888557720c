#include "einstab/operators.hpp"

#include <cmath>

#include "einstab/errors.hpp"

namespace einstab {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;
}

std::vector<std::pair<int, int>> sym2_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  p.reserve(static_cast<size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.emplace_back(i, j);
  return p;
}

std::vector<std::pair<int, int>> form2_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  p.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return p;
}

std::vector<double> sym2_coordinates(const Sym2& h) {
  const auto pairs = sym2_pairs(h.dim);
  std::vector<double> c(pairs.size());
  for (size_t a = 0; a < pairs.size(); ++a) {
    const auto [i, j] = pairs[a];
    c[a] = (i == j) ? h(i, i) : std::sqrt(2.0) * h(i, j);
  }
  return c;
}

Sym2 sym2_from_coordinates(int n, const std::vector<double>& coords) {
  const auto pairs = sym2_pairs(n);
  if (coords.size() != pairs.size())
    throw input_error("sym2_from_coordinates: coordinate count mismatch");
  Sym2 h(n);
  for (size_t a = 0; a < pairs.size(); ++a) {
    const auto [i, j] = pairs[a];
    if (i == j) {
      h(i, i) = coords[a];
    } else {
      h(i, j) = h(j, i) = kSqrtHalf * coords[a];
    }
  }
  return h;
}

Sym2 apply_curvature_action(const Curv4& t, const Sym2& h) {
  if (t.dim != h.dim) throw input_error("apply_curvature_action: dimension mismatch");
  const int n = t.dim;
  Sym2 out(n);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += t(i, x, y, j) * h(j, i);
      out(x, y) = s;
      out(y, x) = s;
    }
  return out;
}

Sym2Operator sym2_operator(const Curv4& t) {
  validate_curvature(t, /*with_bianchi=*/false, "sym2_operator input");
  const int n = t.dim;
  const auto pairs = sym2_pairs(n);
  const int N = static_cast<int>(pairs.size());

  // Column a holds the coordinates of t ° eta_a; pair symmetry of t makes
  // the matrix symmetric, so only the upper triangle is computed.
  Sym2Operator op;
  op.dim = n;
  op.matrix = DMatrix(N, N);
  std::vector<Sym2> images;
  images.reserve(pairs.size());
  for (const auto& [p, q] : pairs) {
    Sym2 eta(n);
    if (p == q) {
      eta(p, p) = 1.0;
    } else {
      eta(p, q) = eta(q, p) = kSqrtHalf;
    }
    images.push_back(apply_curvature_action(t, eta));
  }
  for (int a = 0; a < N; ++a) {
    const std::vector<double> col = sym2_coordinates(images[static_cast<size_t>(a)]);
    for (int b = a; b < N; ++b) {
      op.matrix(a, b) = col[static_cast<size_t>(b)];
      op.matrix(b, a) = col[static_cast<size_t>(b)];
    }
  }
  return op;
}

Form2Operator form2_operator(const Curv4& t) {
  validate_curvature(t, /*with_bianchi=*/false, "form2_operator input");
  const int n = t.dim;
  const auto pairs = form2_pairs(n);
  const int N = static_cast<int>(pairs.size());
  Form2Operator op;
  op.dim = n;
  op.matrix = DMatrix(N, N);
  for (int a = 0; a < N; ++a) {
    const auto [i, j] = pairs[static_cast<size_t>(a)];
    for (int b = a; b < N; ++b) {
      const auto [k, l] = pairs[static_cast<size_t>(b)];
      const double entry = t(j, i, k, l);
      op.matrix(a, b) = entry;
      op.matrix(b, a) = entry;
    }
  }
  return op;
}

Curv4 curv4_from_form2(const Form2Operator& op) {
  const int n = op.dim;
  const auto pairs = form2_pairs(n);
  Curv4 t(n);
  for (size_t a = 0; a < pairs.size(); ++a) {
    const auto [i, j] = pairs[a];
    for (size_t b = 0; b < pairs.size(); ++b) {
      const auto [k, l] = pairs[b];
      const double x = -op.matrix(static_cast<int>(a), static_cast<int>(b));
      t(i, j, k, l) = x;
      t(j, i, k, l) = -x;
      t(i, j, l, k) = -x;
      t(j, i, l, k) = x;
    }
  }
  return t;
}

CubicInvariants cubic_invariants(const Curv4& t) {
  validate_curvature(t, /*with_bianchi=*/false, "cubic_invariants input");
  const int n = t.dim;
  CubicInvariants inv{0.0, 0.0, 0.0};

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double tijkl = t(i, j, k, l);
          if (tijkl == 0.0) continue;
          double s1 = 0.0;
          double s2 = 0.0;
          for (int m = 0; m < n; ++m)
            for (int p = 0; p < n; ++p) {
              s1 += t(i, m, k, p) * t(j, p, l, m);
              s2 += t(i, j, m, p) * t(k, l, m, p);
            }
          inv.c1 += tijkl * s1;
          inv.c2 += tijkl * s2;
        }

  const Form2Operator hat = form2_operator(t);
  const DMatrix sq = matmul(hat.matrix, hat.matrix);
  const DMatrix cu = matmul(sq, hat.matrix);
  for (int a = 0; a < cu.rows; ++a) inv.tr_hat3 += cu(a, a);
  return inv;
}

DMatrix traceless_sym2_basis(int n) {
  const auto pairs = sym2_pairs(n);
  const int N = static_cast<int>(pairs.size());
  DMatrix q(N, N - 1);
  int col = 0;
  // Off-diagonal basis elements are already trace-free.
  for (int a = 0; a < N; ++a) {
    const auto [i, j] = pairs[static_cast<size_t>(a)];
    if (i != j) q(a, col++) = 1.0;
  }
  // Diagonal directions orthogonal to the metric:
  //   (e_1(x)e_1 + ... + e_k(x)e_k - k e_{k+1}(x)e_{k+1}) / sqrt(k(k+1)).
  for (int k = 1; k < n; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int a = 0; a < N; ++a) {
      const auto [i, j] = pairs[static_cast<size_t>(a)];
      if (i != j) continue;
      if (i < k)
        q(a, col) = scale;
      else if (i == k)
        q(a, col) = -k * scale;
    }
    ++col;
  }
  return q;
}

DMatrix hodge_star_dim4() {
  // Basis order (01),(02),(03),(12),(13),(23); orientation e1^e2^e3^e4.
  DMatrix s(6, 6);
  s(0, 5) = s(5, 0) = 1.0;
  s(1, 4) = s(4, 1) = -1.0;
  s(2, 3) = s(3, 2) = 1.0;
  return s;
}

DualSplit dual_split(const Curv4& w) {
  if (w.dim != 4) throw input_error("dual_split: unsupported dimension, need n == 4");
  const Contraction c = contract(w);
  const double scale = std::max(1.0, w.max_abs());
  if (c.ric.max_abs() > 1e-8 * scale)
    throw input_error("dual_split: input is not trace-free (not a Weyl part)");

  const Form2Operator hat = form2_operator(w);
  const DMatrix star = hodge_star_dim4();
  DMatrix p_plus(6, 6), p_minus(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const double id = (i == j) ? 1.0 : 0.0;
      p_plus(i, j) = 0.5 * (id + star(i, j));
      p_minus(i, j) = 0.5 * (id - star(i, j));
    }

  DualSplit d;
  d.plus.dim = 4;
  d.minus.dim = 4;
  d.plus.matrix = matmul(p_plus, matmul(hat.matrix, p_plus));
  d.minus.matrix = matmul(p_minus, matmul(hat.matrix, p_minus));
  return d;
}

}  // namespace einstab

#ifndef EINSTAB_TESTS_SUPPORT_HPP
#define EINSTAB_TESTS_SUPPORT_HPP

#include <cmath>

#include "einstab/model.hpp"
#include "einstab/random_tensors.hpp"
#include "einstab/tensor.hpp"

namespace einstab::testing {

inline constexpr double kPi = 3.14159265358979323846;

inline double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

inline double max_component_diff(const Curv4& a, const Curv4& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::fabs(a.v[i] - b.v[i]));
  return m;
}

inline DMatrix standard_j(int n) {
  DMatrix j(n, n);
  for (int k = 0; k + 1 < n; k += 2) {
    j(k + 1, k) = 1.0;
    j(k, k + 1) = -1.0;
  }
  return j;
}

// Brute-force Ricci contraction, independent of the library path.
inline Sym2 ricci_oracle(const Curv4& t) {
  const int n = t.dim;
  Sym2 ric(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += t(i, j, k, i);
      ric(j, k) = s;
    }
  return ric;
}

// Brute-force full-sum norm over every index tuple.
inline double norm_sq_oracle(const Curv4& t) {
  const int n = t.dim;
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += t(i, j, k, l) * t(i, j, k, l);
  return s;
}

}  // namespace einstab::testing

#endif

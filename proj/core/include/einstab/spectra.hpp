#ifndef EINSTAB_SPECTRA_HPP
#define EINSTAB_SPECTRA_HPP

#include <cstdint>
#include <utility>

#include "einstab/model.hpp"

namespace einstab {

/// Extremal eigenvalue data of the curvature actions on one fiber.
struct SpectralSummary {
  double r_sup = 0.0;  // top eigenvalue of the full curvature action on traceless Sym2
  double w_sup = 0.0;  // top eigenvalue of the Weyl action on Sym2 (always >= 0)
  double w_lq = 0.0;   // L^{n/2} norm of the Weyl eigenvalue function, w_sup * vol^{2/n}
  double sectional_min = 0.0;  // sampled estimates, see sectional_range
  double sectional_max = 0.0;
};

inline constexpr int kDefaultSectionalSamples = 200;
inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Estimates the range of sectional curvatures K(X,Y) = R(X,Y,Y,X) over
/// orthonormal pairs: seeded random starts plus every coordinate plane,
/// each refined by 50 projected gradient steps on the space of 2-frames.
/// The result is a sampled estimate, not a certified bound.
std::pair<double, double> sectional_range(const ManifoldModel& m, int samples,
                                          std::uint64_t seed);

/// r_sup, w_sup and the L^{n/2} norm for a homogeneous model, plus the
/// sampled sectional range.  The traceless restriction is taken for r_sup;
/// w_sup is computed on all of Sym2 (the Weyl action kills the metric
/// direction, so the two readings agree for it).
SpectralSummary eigen_functions(const ManifoldModel& m,
                                int sectional_samples = kDefaultSectionalSamples,
                                std::uint64_t seed = kDefaultSeed);

}  // namespace einstab

#endif

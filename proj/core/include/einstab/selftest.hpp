#ifndef EINSTAB_SELFTEST_HPP
#define EINSTAB_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace einstab {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  double worst_residual = 0.0;
  double tolerance = 0.0;
};

struct SelftestResult {
  std::vector<SelftestCheck> checks;
  int passed = 0;
  int failed = 0;
};

/// Seeded property suite: permutation-sum vs explicit Euler integrands,
/// algebraic identity residuals, trace and indefiniteness checks, catalog
/// golden numbers.  Deterministic for a fixed seed.
SelftestResult run_selftest(std::uint64_t seed);

}  // namespace einstab

#endif

#pragma once

#include <string>
#include <vector>

#include "latzeta/arithmetic.hpp"
#include "latzeta/precision.hpp"

namespace latzeta {

/// Outcome of one residual suite. Residuals are scaled by max(1, largest
/// magnitude among the terms that enter the identity), so that the binary64
/// rounding floor is the same everywhere in the strip.
struct SuiteResult {
  std::string name;
  bool pass = false;
  real_t worst_residual = 0.0;
  real_t threshold = 0.0;
  int cases = 0;
  std::string worst_case;  // human-readable location of the worst residual
};

/// Twenty fixed pseudo-random points with -10 < Re s < 10, |Im s| < 30, away from s = 1.
[[nodiscard]] std::vector<complex_t> identity_sample();

/// E(s, delta) assembled from the Hurwitz formula without folding delta > 1.
[[nodiscard]] complex_t energy_unfolded(complex_t s, real_t delta, const PrecisionPolicy& policy);

/// Richardson-extrapolated limit of (s - 1) f(s) along s = 1 + t, t in {1e-2, 1e-3, 1e-4}.
template <typename F>
[[nodiscard]] real_t extrapolated_residue(F&& f) {
  const real_t t[3] = {1e-2, 1e-3, 1e-4};
  real_t g[3];
  for (int i = 0; i < 3; ++i) g[i] = (t[i] * f(complex_t(1.0 + t[i], 0.0))).real();
  // Neville's scheme for the quadratic through (t_i, g_i), evaluated at 0.
  const real_t p01 = (t[1] * g[0] - t[0] * g[1]) / (t[1] - t[0]);
  const real_t p12 = (t[2] * g[1] - t[1] * g[2]) / (t[2] - t[1]);
  return (t[2] * p01 - t[0] * p12) / (t[2] - t[0]);
}

[[nodiscard]] SuiteResult identity_suite(const PrecisionPolicy& policy);
[[nodiscard]] SuiteResult factorization_suite(const PrecisionPolicy& policy);
[[nodiscard]] SuiteResult theta_suite(const PrecisionPolicy& policy);
[[nodiscard]] SuiteResult duality_suite(const PrecisionPolicy& policy);
[[nodiscard]] SuiteResult symmetry_suite(const PrecisionPolicy& policy);
[[nodiscard]] SuiteResult residue_suite(const PrecisionPolicy& policy);

[[nodiscard]] std::vector<SuiteResult> run_validation_suites(const PrecisionPolicy& policy);

}  // namespace latzeta

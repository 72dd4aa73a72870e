#pragma once

#include "latzeta/arithmetic.hpp"
#include "latzeta/precision.hpp"

namespace latzeta {

/// Arguments of theta(z, it) = sum_n exp(-pi n^2 t) exp(2 pi i n z).
struct ThetaArgs {
  real_t z = 0.5;  // phase in (0, 1)
  real_t t = 1.0;  // modular parameter, t > 0
};

struct QuadratureResult {
  complex_t value{};
  real_t error_estimate = 0.0;
};

/// Jacobi theta on the imaginary axis. Direct series for t >= 1, the modular
/// transform t^{-1/2} sum_m exp(-pi (m - z)^2 / t) below. Throws DomainError for t <= 0.
[[nodiscard]] real_t jacobi_theta(real_t z, real_t t);
[[nodiscard]] inline real_t jacobi_theta(const ThetaArgs& args) {
  return jacobi_theta(args.z, args.t);
}

/// zeta(1 - alpha, z) + zeta(1 - alpha, 1 - z) from
///   int_0^inf [theta(z, it) - 1] t^{alpha/2 - 1} dt
/// divided by pi^{-(1-alpha)/2} Gamma((1 - alpha)/2). Requires Re alpha > 0, 0 < z < 1.
[[nodiscard]] complex_t hurwitz_pair_via_theta(complex_t alpha, real_t z,
                                               const PrecisionPolicy& policy = {});

/// E(s, delta) for Re s < 1 built only from theta integrals. Rejects the strip
/// |Re s| < 1e-3 (BranchBoundary) and the poles of Gamma(s/2) (PoleProximity).
[[nodiscard]] complex_t energy_via_theta(complex_t s, real_t delta,
                                         const PrecisionPolicy& policy = {});

/// Same, with the summed quadrature error estimate propagated to E.
[[nodiscard]] QuadratureResult energy_via_theta_evaluate(complex_t s, real_t delta,
                                                         const PrecisionPolicy& policy);

}  // namespace latzeta

#pragma once

#include <vector>

#include "latzeta/arithmetic.hpp"
#include "latzeta/precision.hpp"

namespace latzeta {

/// Arguments of zeta(s, a) = sum_{n>=0} (n + a)^{-s}; requires a > 0 and s != 1.
struct HurwitzArgs {
  complex_t s;
  real_t a = 1.0;
};

/// A zeta value together with what the evaluator knows about its quality.
struct ZetaEvaluation {
  complex_t value{};
  complex_t derivative{};  // d/ds, only filled when requested
  // Magnitude of the first omitted correction plus a rounding estimate.
  real_t error_estimate = 0.0;
  // Size of the largest partial quantity that cancelled into `value`.
  real_t scale = 0.0;
};

/// Hurwitz zeta on the punctured plane. Euler-Maclaurin for
/// Re s >= policy.reflection_threshold, Hurwitz's functional equation below.
[[nodiscard]] complex_t hurwitz_zeta(const HurwitzArgs& args, const PrecisionPolicy& policy = {});

/// d/ds zeta(s, a) from the term-wise differentiated expansion.
[[nodiscard]] complex_t hurwitz_zeta_ds(const HurwitzArgs& args, const PrecisionPolicy& policy = {});

/// Value, optional derivative, and error bookkeeping in one pass.
[[nodiscard]] ZetaEvaluation hurwitz_zeta_evaluate(const HurwitzArgs& args,
                                                   const PrecisionPolicy& policy,
                                                   bool with_derivative);

[[nodiscard]] complex_t riemann_zeta(complex_t s, const PrecisionPolicy& policy = {});
[[nodiscard]] complex_t riemann_zeta_ds(complex_t s, const PrecisionPolicy& policy = {});

/// Complex Gamma via the Lanczos approximation (g = 607/128, 15 terms) and
/// reflection for Re s < 1/2.
[[nodiscard]] complex_t gamma(complex_t s, const PrecisionPolicy& policy = {});

/// A logarithm of Gamma suitable for exponentiation; the branch is not the
/// principal one of log Gamma for Re s < 1/2.
[[nodiscard]] complex_t log_gamma(complex_t s, const PrecisionPolicy& policy = {});

[[nodiscard]] complex_t digamma(complex_t s, const PrecisionPolicy& policy = {});

/// Lambda(s) - Lambda(1 - s) with Lambda(s) = pi^{-s/2} Gamma(s/2) zeta(s).
[[nodiscard]] complex_t duality_residual(complex_t s, const PrecisionPolicy& policy = {});

/// B_2, B_4, ..., B_{2J} from the exact rational recurrence; 1 <= J <= 60.
[[nodiscard]] std::vector<real_t> bernoulli_numbers(int count);

/// The evaluation routes behind hurwitz_zeta, exposed so the two can be
/// compared against each other where both are accurate.
namespace zeta_routes {

/// Euler-Maclaurin with the adaptive (N, J) rule. `forced_terms` > 0 pins N
/// to that value instead of the adaptive start.
[[nodiscard]] ZetaEvaluation euler_maclaurin(const HurwitzArgs& args,
                                             const PrecisionPolicy& policy,
                                             bool with_derivative, int forced_terms = 0);

/// zeta(1-w, a) = 2 Gamma(w) (2 pi)^{-w} sum cos(pi w/2 - 2 pi n a) n^{-w};
/// requires Re s < 0.
[[nodiscard]] ZetaEvaluation functional_equation(const HurwitzArgs& args,
                                                 const PrecisionPolicy& policy,
                                                 bool with_derivative);

}  // namespace zeta_routes

namespace detail {

/// B_{2j} / (2j)! for j = 1..60, index j-1.
[[nodiscard]] const std::vector<real_t>& euler_maclaurin_coefficients();

/// Number of Dirichlet terms so that sum_{n>M} n^{-sigma} <= tail_tol.
[[nodiscard]] std::size_t dirichlet_terms(real_t sigma, real_t tail_tol);

void check_pole(complex_t s, const PrecisionPolicy& policy);

}  // namespace detail

}  // namespace latzeta

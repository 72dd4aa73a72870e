#pragma once

#include <utility>
#include <vector>

#include "latzeta/arithmetic.hpp"
#include "latzeta/continuation.hpp"
#include "latzeta/precision.hpp"

namespace latzeta {

/// Off-critical zero asymptotics as eps = 1 - delta -> 0+.
struct AsymptoticPrediction {
  int k = 0;
  real_t epsilon = 0.0;
  real_t rho_x_pred = 0.0;  // every displayed term, including the oscillatory one
  real_t rho_y_pred = 0.0;
  real_t delta_rho_x = 0.0;  // oscillatory eps^{2 ln3/ln2} terms alone
  real_t delta_rho_y = 0.0;
  real_t exponent = 0.0;     // 2 ln 3 / ln 2
};

/// 2 ln 3 / ln 2.
[[nodiscard]] real_t deviation_exponent() noexcept;

/// (8 / (3 ln 2)) (pi^2 / 8)^{ln 3 / ln 2}.
[[nodiscard]] real_t deviation_amplitude() noexcept;

/// (2k + 1) pi / ln 2, the eps -> 0 limit of rho_y.
[[nodiscard]] real_t limiting_ordinate(int k) noexcept;

/// Smooth part of rho_x: (2/ln2) ln eps + (-3 + (2/ln2) ln pi) + eps/ln2
///   + (1/4 + 7 pi^2/24) eps^2 / ln2 + (1/12 + 7 pi^2/24) eps^3 / ln2.
[[nodiscard]] real_t smooth_rho_x(real_t epsilon);

/// Throws DomainError unless 0 < eps <= 0.5.
[[nodiscard]] AsymptoticPrediction predict(int k, real_t epsilon);
[[nodiscard]] complex_t predict_offcritical(int k, real_t epsilon);

/// Leading deviations (delta rho_x, delta rho_y).
[[nodiscard]] std::pair<real_t, real_t> deviation_formulas(int k, real_t epsilon);

/// Deviations of an actual zero rho at eps from the smooth terms and from the
/// limiting ordinate: (rho_x - smooth_rho_x(eps), rho_y - (2k+1) pi / ln 2).
[[nodiscard]] std::pair<real_t, real_t> measured_deviations(int k, real_t epsilon, complex_t rho);

/// Residual of the reduced zero equation
///   2^rho + ((1 - 2^{2+rho})/8) pi^2 (zeta(-1-rho)/zeta(1-rho)) (eps^2 + eps^3 + 3/4 eps^4 + 1/2 eps^5)
///         - (1/3) ((1 - 2^{4+rho})/2^7) pi^4 (zeta(-3-rho)/zeta(1-rho)) (eps^4 + 2 eps^5)
/// with the zeta ratios evaluated by the kernel.
[[nodiscard]] complex_t reduced_equation_residual(complex_t rho, real_t epsilon,
                                                  const PrecisionPolicy& policy = {});

/// Newton solution of the reduced equation seeded from predict_offcritical.
/// Requires 0 < eps <= 0.05.
[[nodiscard]] complex_t solve_reduced_equation(int k, real_t epsilon,
                                               const PrecisionPolicy& policy = {});

/// Least-squares slope of ln|y| against ln x.
[[nodiscard]] real_t fit_power_law(const std::vector<std::pair<real_t, real_t>>& points);

/// Slope of ln|delta rho_y| against ln eps over curve samples with
/// 0 < eps <= max_epsilon; InsufficientSamples below four samples.
[[nodiscard]] real_t fit_exponent(const BranchCurve& curve, int k, real_t max_epsilon = 0.02);

struct DeviationRow {
  int k = 0;
  real_t epsilon = 0.0;
  complex_t rho{};  // traced zero
  real_t measured_drho_x = 0.0;
  real_t measured_drho_y = 0.0;
  real_t predicted_drho_x = 0.0;
  real_t predicted_drho_y = 0.0;
  real_t fitted_exponent = 0.0;  // NaN when the branch has too few samples
};

/// For each k, refines the predicted zero at eps_seed = max(0.02, max eps),
/// traces it to the smallest eps and tabulates deviations at every requested eps.
[[nodiscard]] std::vector<DeviationRow> deviation_table(const std::vector<int>& ks,
                                                        const std::vector<real_t>& epsilons,
                                                        const PrecisionPolicy& policy,
                                                        real_t step = 0.01);

}  // namespace latzeta

#include "latzeta/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "latzeta/errors.hpp"
#include "latzeta/parallel.hpp"
#include "latzeta/zero_finder.hpp"
#include "latzeta/zeta_kernel.hpp"

namespace latzeta {

namespace {

constexpr int kMaxNewtonIters = 50;

void check_epsilon(real_t epsilon, real_t upper) {
  if (!(epsilon > 0.0 && epsilon <= upper)) {
    std::ostringstream msg;
    msg << "epsilon must lie in (0, " << upper << "], got " << epsilon;
    throw DomainError(msg.str());
  }
}

real_t oscillation_phase(int k) { return (kLn3 / kLn2) * (2.0 * k + 1.0) * kPi; }

struct ReducedTerms {
  complex_t value{};
  complex_t derivative{};
};

ReducedTerms reduced_equation(complex_t rho, real_t eps, const PrecisionPolicy& policy,
                              bool with_derivative) {
  const real_t e2 = eps * eps;
  const real_t poly_a = e2 * (1.0 + eps + 0.75 * e2 + 0.5 * e2 * eps);
  const real_t poly_b = e2 * e2 * (1.0 + 2.0 * eps);
  const real_t pi2 = kPi * kPi;

  const auto lower = hurwitz_zeta_evaluate({1.0 - rho, 1.0}, policy, with_derivative);
  const auto mid = hurwitz_zeta_evaluate({-1.0 - rho, 1.0}, policy, with_derivative);
  const auto deep = hurwitz_zeta_evaluate({-3.0 - rho, 1.0}, policy, with_derivative);

  const complex_t p2 = std::exp(rho * kLn2);
  const complex_t a = (1.0 - 4.0 * p2) * (pi2 / 8.0);
  const complex_t b = (1.0 / 3.0) * (1.0 - 16.0 * p2) * (pi2 * pi2 / 128.0);
  const complex_t r1 = mid.value / lower.value;
  const complex_t r2 = deep.value / lower.value;

  ReducedTerms out;
  out.value = p2 + a * r1 * poly_a - b * r2 * poly_b;
  if (with_derivative) {
    // d/drho zeta(c - rho) = -zeta'(c - rho).
    const complex_t log_d_lower = -lower.derivative / lower.value;
    const complex_t dr1 = (-mid.derivative) / lower.value - r1 * log_d_lower;
    const complex_t dr2 = (-deep.derivative) / lower.value - r2 * log_d_lower;
    const complex_t da = -4.0 * kLn2 * p2 * (pi2 / 8.0);
    const complex_t db = (1.0 / 3.0) * (-16.0 * kLn2 * p2) * (pi2 * pi2 / 128.0);
    out.derivative = kLn2 * p2 + (da * r1 + a * dr1) * poly_a - (db * r2 + b * dr2) * poly_b;
  }
  return out;
}

}  // namespace

real_t deviation_exponent() noexcept { return 2.0 * kLn3 / kLn2; }

real_t deviation_amplitude() noexcept {
  return 8.0 / (3.0 * kLn2) * std::pow(kPi * kPi / 8.0, kLn3 / kLn2);
}

real_t limiting_ordinate(int k) noexcept { return (2.0 * k + 1.0) * kPi / kLn2; }

real_t smooth_rho_x(real_t epsilon) {
  const real_t c = 7.0 * kPi * kPi / 24.0;
  return (2.0 / kLn2) * std::log(epsilon) + (-3.0 + (2.0 / kLn2) * kLnPi) + epsilon / kLn2 +
         (0.25 + c) * epsilon * epsilon / kLn2 + (1.0 / 12.0 + c) * epsilon * epsilon * epsilon / kLn2;
}

std::pair<real_t, real_t> deviation_formulas(int k, real_t epsilon) {
  check_epsilon(epsilon, 0.5);
  const real_t magnitude = deviation_amplitude() * std::pow(epsilon, deviation_exponent());
  const real_t phase = oscillation_phase(k);
  return {magnitude * std::cos(phase), magnitude * std::sin(phase)};
}

AsymptoticPrediction predict(int k, real_t epsilon) {
  check_epsilon(epsilon, 0.5);
  AsymptoticPrediction p;
  p.k = k;
  p.epsilon = epsilon;
  p.exponent = deviation_exponent();
  std::tie(p.delta_rho_x, p.delta_rho_y) = deviation_formulas(k, epsilon);
  p.rho_x_pred = smooth_rho_x(epsilon) + p.delta_rho_x;
  p.rho_y_pred = limiting_ordinate(k) + p.delta_rho_y;
  return p;
}

complex_t predict_offcritical(int k, real_t epsilon) {
  const auto p = predict(k, epsilon);
  return {p.rho_x_pred, p.rho_y_pred};
}

std::pair<real_t, real_t> measured_deviations(int k, real_t epsilon, complex_t rho) {
  check_epsilon(epsilon, 0.5);
  return {rho.real() - smooth_rho_x(epsilon), rho.imag() - limiting_ordinate(k)};
}

complex_t reduced_equation_residual(complex_t rho, real_t epsilon, const PrecisionPolicy& policy) {
  return reduced_equation(rho, epsilon, policy, false).value;
}

complex_t solve_reduced_equation(int k, real_t epsilon, const PrecisionPolicy& policy) {
  check_epsilon(epsilon, 0.05);
  complex_t rho = predict_offcritical(k, epsilon);
  for (int iter = 0; iter < kMaxNewtonIters; ++iter) {
    const auto eq = reduced_equation(rho, epsilon, policy, true);
    if (std::abs(eq.derivative) == 0.0) throw DerivativeUnderflow("reduced equation: zero slope");
    const complex_t step = eq.value / eq.derivative;
    rho -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<real_t>::epsilon() * std::abs(rho)) return rho;
  }
  // Rounding can keep the last step a few ulps above the floor; accept a
  // small final residual relative to 2^rho.
  const auto eq = reduced_equation(rho, epsilon, policy, false);
  if (std::abs(eq.value) <= policy.newton_tol * std::abs(std::exp(rho * kLn2))) return rho;
  std::ostringstream msg;
  msg << "reduced equation did not converge for k = " << k << ", eps = " << epsilon;
  throw NoConvergence(msg.str());
}

real_t fit_power_law(const std::vector<std::pair<real_t, real_t>>& points) {
  if (points.size() < 2) throw InsufficientSamples("power-law fit needs at least two points");
  real_t mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += std::log(x);
    my += std::log(std::abs(y));
  }
  mx /= static_cast<real_t>(points.size());
  my /= static_cast<real_t>(points.size());
  real_t sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    const real_t dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(std::abs(y)) - my);
  }
  if (sxx == 0.0) throw InsufficientSamples("power-law fit needs distinct abscissae");
  return sxy / sxx;
}

real_t fit_exponent(const BranchCurve& curve, int k, real_t max_epsilon) {
  std::vector<std::pair<real_t, real_t>> points;
  for (const auto& s : curve.samples) {
    const real_t eps = 1.0 - s.delta;
    if (!(eps > 0.0 && eps <= max_epsilon)) continue;
    const real_t dev = s.rho.imag() - limiting_ordinate(k);
    if (dev != 0.0) points.emplace_back(eps, dev);
  }
  if (points.size() < 4) {
    std::ostringstream msg;
    msg << "only " << points.size() << " samples with eps <= " << max_epsilon;
    throw InsufficientSamples(msg.str());
  }
  return fit_power_law(points);
}

std::vector<DeviationRow> deviation_table(const std::vector<int>& ks,
                                          const std::vector<real_t>& epsilons,
                                          const PrecisionPolicy& policy, real_t step) {
  if (epsilons.empty()) throw DomainError("deviation table needs at least one epsilon");
  for (real_t eps : epsilons) check_epsilon(eps, 0.05);
  const real_t eps_seed = std::max(0.02, *std::max_element(epsilons.begin(), epsilons.end()));
  const real_t eps_end = *std::min_element(epsilons.begin(), epsilons.end());

  TraceOptions trace;
  trace.pinned_deltas.clear();
  for (real_t eps : epsilons) trace.pinned_deltas.push_back(1.0 - eps);

  std::vector<std::vector<DeviationRow>> per_k(ks.size());
  parallel_for(ks.size(), [&](std::size_t i) {
    const int k = ks[i];
    const ZeroRecord seed = refine_zero(predict_offcritical(k, eps_seed), 1.0 - eps_seed, policy);
    const BranchCurve curve = trace_branch(seed, 1.0 - eps_end, step, policy, trace);
    real_t exponent = std::numeric_limits<real_t>::quiet_NaN();
    try {
      exponent = fit_exponent(curve, k);
    } catch (const InsufficientSamples&) {
    }
    for (real_t eps : epsilons) {
      const auto hit = std::find_if(curve.samples.begin(), curve.samples.end(),
                                    [&](const BranchSample& s) {
                                      return std::abs(s.delta - (1.0 - eps)) <= 1e-12;
                                    });
      if (hit == curve.samples.end()) throw NoConvergence("traced branch missed a requested eps");
      DeviationRow row;
      row.k = k;
      row.epsilon = eps;
      row.rho = hit->rho;
      std::tie(row.measured_drho_x, row.measured_drho_y) = measured_deviations(k, eps, hit->rho);
      std::tie(row.predicted_drho_x, row.predicted_drho_y) = deviation_formulas(k, eps);
      row.fitted_exponent = exponent;
      per_k[i].push_back(row);
    }
  });
  std::vector<DeviationRow> rows;
  for (auto& group : per_k) rows.insert(rows.end(), group.begin(), group.end());
  return rows;
}

}  // namespace latzeta

#include "latzeta/lattice_energy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "latzeta/errors.hpp"
#include "latzeta/simd/power_sum.hpp"
#include "latzeta/zeta_kernel.hpp"

namespace latzeta {

namespace {

constexpr real_t kEps = std::numeric_limits<real_t>::epsilon();

constexpr std::array<real_t, 4> kFactorizable = {1.0 / 5.0, 1.0 / 3.0, 1.0 / 2.0, 1.0};

// cos^2(pi n z) with z = 1/2 + offset, reduced so that odd n (where the
// weight is tiny near delta = 1) keep full relative accuracy.
std::vector<real_t> cos2_weights(real_t offset, std::size_t terms) {
  std::vector<real_t> weights(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    const std::size_t n = i + 1;
    const real_t nd = static_cast<real_t>(n) * offset;
    const real_t frac = nd - std::floor(nd);
    const real_t trig = (n % 2 == 0) ? std::cos(kPi * frac) : std::sin(kPi * frac);
    weights[i] = trig * trig;
  }
  return weights;
}

EnergyEvaluation reflected_energy(complex_t s, const LatticeParams& lattice,
                                  const PrecisionPolicy& policy, bool with_derivative) {
  const complex_t w = 1.0 - s;
  const std::size_t terms = detail::dirichlet_terms(w.real(), 1e-17);
  const auto weights = cos2_weights(lattice.shift_offset, terms);
  const auto sums = simd::weighted_power_sum(simd::Progression{1.0, 1.0, terms}, weights, w,
                                             with_derivative);

  // 2^{2-s} Gamma(w) (2 pi)^{-w}, then the cos(pi w / 2) factor.
  const complex_t base = std::exp((2.0 - s) * kLn2 + log_gamma(w, policy) - w * kLn2Pi);
  const complex_t phase = 0.5 * kPi * w;
  const complex_t cos_phase = std::cos(phase);

  EnergyEvaluation out;
  out.value = base * cos_phase * sums.sum;
  const real_t leading = weights[0] + std::pow(2.0, -w.real()) * weights[1];
  out.scale = std::abs(base * cos_phase) * std::max(leading, kEps);
  out.error_estimate = 8.0 * kEps * out.scale * (1.0 + std::abs(w));
  if (with_derivative) {
    const complex_t psi = digamma(w, policy);
    const complex_t d_prefactor =
        base * ((kLn2Pi - kLn2 - psi) * cos_phase + 0.5 * kPi * std::sin(phase));
    out.derivative = d_prefactor * sums.sum + base * cos_phase * sums.log_sum;
  }
  return out;
}

EnergyEvaluation hurwitz_energy(complex_t s, const LatticeParams& lattice,
                                const PrecisionPolicy& policy, bool with_derivative) {
  const auto riemann = hurwitz_zeta_evaluate({s, 1.0}, policy, with_derivative);
  const auto first = hurwitz_zeta_evaluate({s, lattice.shift}, policy, with_derivative);
  const auto second = hurwitz_zeta_evaluate({s, lattice.shift_complement}, policy, with_derivative);

  const complex_t two_pow = std::exp(-s * kLn2);
  const complex_t bracket = riemann.value + 0.5 * (first.value + second.value);
  EnergyEvaluation out;
  out.value = two_pow * bracket;
  const real_t mag = std::abs(two_pow);
  out.scale = mag * std::max({riemann.scale, first.scale, second.scale});
  out.error_estimate =
      mag * (riemann.error_estimate + 0.5 * (first.error_estimate + second.error_estimate));
  if (with_derivative) {
    out.derivative = -kLn2 * out.value +
                     two_pow * (riemann.derivative + 0.5 * (first.derivative + second.derivative));
  }
  return out;
}

// sum_{m<count} (offset + 2m)^{-s}, accumulated from the far end inward.
complex_t reverse_progression_sum(real_t offset, long count, complex_t s) {
  constexpr long chunk = 4096;
  complex_t total{};
  for (long end = count; end > 0; end -= chunk) {
    const long begin = std::max(0L, end - chunk);
    const simd::Progression piece{offset + 2.0 * static_cast<real_t>(begin), 2.0,
                                  static_cast<std::size_t>(end - begin)};
    total += simd::weighted_power_sum(piece, {}, s, false).sum;
  }
  return total;
}

}  // namespace

LatticeParams LatticeParams::from_delta(real_t delta) {
  if (!std::isfinite(delta) || delta <= 0.0) {
    std::ostringstream msg;
    msg << "lattice parameter delta must be positive, got " << delta;
    throw DomainError(msg.str());
  }
  if (delta > 1.0) delta = 1.0 / delta;
  LatticeParams p;
  p.delta = delta;
  p.spacing_long = 2.0 / (1.0 + delta);
  p.spacing_short = 2.0 * delta / (1.0 + delta);
  p.shift = 1.0 / (1.0 + delta);
  p.shift_complement = delta / (1.0 + delta);
  p.shift_offset = (1.0 - delta) / (2.0 * (1.0 + delta));
  p.epsilon = 1.0 - delta;
  return p;
}

EnergyEvaluation energy_evaluate(complex_t s, real_t delta, const PrecisionPolicy& policy,
                                 bool with_derivative) {
  const LatticeParams lattice = LatticeParams::from_delta(delta);
  detail::check_pole(s, policy);
  if (lattice.delta == 1.0) {
    const auto z = hurwitz_zeta_evaluate({s, 1.0}, policy, with_derivative);
    return {z.value, z.derivative, z.error_estimate, z.scale};
  }
  if (s.real() < policy.reflection_threshold && s.real() < 0.0)
    return reflected_energy(s, lattice, policy, with_derivative);
  return hurwitz_energy(s, lattice, policy, with_derivative);
}

complex_t energy(complex_t s, real_t delta, const PrecisionPolicy& policy) {
  return energy_evaluate(s, delta, policy, false).value;
}

complex_t energy_ds(complex_t s, real_t delta, const PrecisionPolicy& policy) {
  return energy_evaluate(s, delta, policy, true).derivative;
}

DirectSumResult energy_direct_sum(complex_t s, real_t delta, long cutoff) {
  if (!(s.real() > 1.0)) throw DomainError("direct lattice sum converges only for Re s > 1");
  if (cutoff < 1000) throw DomainError("direct lattice sum needs cutoff >= 1000");
  const LatticeParams lattice = LatticeParams::from_delta(delta);
  const real_t b = lattice.spacing_short;

  // Distances |p - k| for k in {0, b} and p in L_delta with |p| <= 2 cutoff,
  // grouped into arithmetic progressions of stride 2.
  struct Run {
    real_t offset;
    long count;
  };
  const std::array<Run, 8> runs = {{
      {2.0, cutoff},       // k = 0, p in 2Z, p > 0
      {2.0, cutoff},       // k = 0, p in 2Z, p < 0
      {b, cutoff},         // k = 0, p = 2n + b, n >= 0
      {2.0 - b, cutoff},   // k = 0, p = 2n + b, n < 0
      {2.0 - b, cutoff},   // k = b, p in 2Z, p > 0
      {b, cutoff + 1},     // k = b, p in 2Z, p <= 0
      {2.0, cutoff - 1},   // k = b, p in 2Z + b, p > b
      {2.0, cutoff},       // k = b, p in 2Z + b, p < b
  }};

  DirectSumResult out;
  real_t tail_error = 0.0;
  for (const Run& run : runs) {
    out.value += reverse_progression_sum(run.offset, run.count, s);
    // Midpoint estimate: sum_{m>=K} f(m) ~ int_{K-1/2}^inf (c + 2x)^{-s} dx.
    const real_t edge = run.offset + 2.0 * static_cast<real_t>(run.count) - 1.0;
    out.tail += std::exp((1.0 - s) * std::log(edge)) / (2.0 * (s - 1.0));
    tail_error += std::abs(s) / 6.0 * std::pow(edge, -s.real() - 1.0);
  }
  out.value = 0.25 * (out.value + out.tail);
  out.tail *= 0.25;
  out.error_estimate =
      0.25 * tail_error + kEps * std::sqrt(static_cast<real_t>(cutoff)) * std::abs(out.value);
  return out;
}

bool is_factorizable_delta(real_t delta) noexcept {
  if (!(delta > 0.0)) return false;
  if (delta > 1.0) delta = 1.0 / delta;
  return std::any_of(kFactorizable.begin(), kFactorizable.end(),
                     [&](real_t d) { return std::abs(delta - d) <= 1e-12; });
}

complex_t factorized_prefactor(complex_t s, real_t delta) {
  if (!is_factorizable_delta(delta))
    throw DomainError("no factorized form for this delta (need 1/5, 1/3, 1/2 or 1)");
  if (delta > 1.0) delta = 1.0 / delta;
  const auto p = [&](real_t base) { return pow_real_base(base, s); };
  if (std::abs(delta - 1.0) <= 1e-12) return p(2.0) * 2.0;
  if (std::abs(delta - 0.5) <= 1e-12) return 1.0 + p(3.0);
  if (std::abs(delta - 1.0 / 3.0) <= 1e-12) return 2.0 - p(2.0) + p(4.0);
  return 3.0 - p(2.0) - p(3.0) + p(6.0);
}

complex_t energy_factorized(complex_t s, real_t delta, const PrecisionPolicy& policy) {
  const complex_t prefactor = factorized_prefactor(s, delta);
  detail::check_pole(s, policy);
  return prefactor * riemann_zeta(s, policy) * std::exp(-(s + 1.0) * kLn2);
}

complex_t TaylorExpansion::evaluate(real_t epsilon) const {
  return zeta_s + epsilon * epsilon * (eps2 + epsilon * (eps3 + epsilon * (eps4 + epsilon * eps5)));
}

TaylorExpansion taylor_expansion(complex_t s, const PrecisionPolicy& policy) {
  detail::check_pole(s, policy);
  detail::check_pole(s + 2.0, policy);
  detail::check_pole(s + 4.0, policy);
  TaylorExpansion t;
  t.s = s;
  t.zeta_s = riemann_zeta(s, policy);
  t.zeta_s_plus_2 = riemann_zeta(s + 2.0, policy);
  t.zeta_s_plus_4 = riemann_zeta(s + 4.0, policy);

  const auto p2 = [&](real_t shift) { return std::exp((s + shift) * kLn2); };
  const complex_t poly2 = s * (1.0 + s);
  const complex_t poly4 = poly2 * (2.0 + s) * (3.0 + s);
  const complex_t a = (p2(2.0) - 1.0) / p2(5.0) * poly2 * t.zeta_s_plus_2;
  const complex_t b = (1.0 / 3.0) * (p2(4.0) - 1.0) / p2(11.0) * poly4 * t.zeta_s_plus_4;

  t.eps2 = a;
  t.eps3 = a;
  t.eps4 = 0.75 * a + b;
  t.eps5 = 0.5 * a + 2.0 * b;
  return t;
}

complex_t taylor_energy(complex_t s, real_t epsilon, const PrecisionPolicy& policy) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw DomainError("taylor_energy needs 0 <= eps < 1");
  return taylor_expansion(s, policy).evaluate(epsilon);
}

}  // namespace latzeta

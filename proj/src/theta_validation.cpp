#include "latzeta/theta_validation.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "latzeta/errors.hpp"
#include "latzeta/lattice_energy.hpp"
#include "latzeta/zeta_kernel.hpp"

namespace latzeta {

namespace {

constexpr real_t kSeriesCut = 1e-17;
constexpr real_t kIntegrandCut = 1e-18;
constexpr real_t kBranchStrip = 1e-3;
constexpr unsigned kMaxDepth = 18;

using Kronrod = boost::math::quadrature::gauss_kronrod<real_t, 31>;

// 2 sum_{n>=1} exp(-pi n^2 t) cos(2 pi n z): theta(z, it) - 1 from the direct series.
real_t direct_tail(real_t z, real_t t) {
  real_t sum = 0.0;
  for (int n = 1;; ++n) {
    const real_t weight = std::exp(-kPi * n * n * t);
    if (weight < kSeriesCut) break;
    sum += weight * std::cos(2.0 * kPi * n * z);
  }
  return 2.0 * sum;
}

// sum_m exp(-pi (m - z)^2 / t) over all integers m, z reduced to [0, 1).
// With skip_origin the m = 0 term is dropped (used at z = 0).
real_t modular_sum(real_t z, real_t t, bool skip_origin) {
  z -= std::floor(z);
  real_t sum = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const real_t right = k - z;
    const real_t left = -k - 1 - z;
    const real_t term_right = (skip_origin && k == 0) ? 0.0 : std::exp(-kPi * right * right / t);
    const real_t term_left = std::exp(-kPi * left * left / t);
    sum += term_right + term_left;
    if (k >= 1 && std::max(term_right, term_left) <= kSeriesCut * sum) break;
  }
  return sum;
}

// theta(0, it) - t^{-1/2}, kept free of cancellation for small t.
real_t theta0_minus_sqrt(real_t t) {
  if (t >= 1.0) return 1.0 + direct_tail(0.0, t) - 1.0 / std::sqrt(t);
  return modular_sum(0.0, t, true) / std::sqrt(t);
}

// theta(0, it) - 1, kept free of cancellation for large t.
real_t theta0_minus_one(real_t t) {
  if (t >= 1.0) return direct_tail(0.0, t);
  return modular_sum(0.0, t, false) / std::sqrt(t) - 1.0;
}

// Upper limit in u = -ln t beyond which theta(z, i e^{-u}) e^{-u Re(p)} is
// negligible; the decay is governed by the distance of z to the integers.
real_t lower_cut(real_t dist, real_t re_p) {
  real_t u = 0.0;
  for (; u < 60.0; u += 0.25) {
    const real_t t = std::exp(-u);
    const real_t bound = 2.0 * std::exp(-kPi * dist * dist / t) / std::sqrt(t) * std::exp(-u * re_p);
    if (bound < kIntegrandCut) break;
  }
  return u;
}

// Upper limit in t for an integrand bounded by 2 exp(-pi t) t^{q}.
real_t upper_cut(real_t q) {
  real_t t = 1.0;
  while (2.0 * std::exp(-kPi * t) * std::pow(t, q) > kIntegrandCut && t < 200.0) t += 0.5;
  return t;
}

template <typename F>
QuadratureResult integrate(F f, real_t a, real_t b, const PrecisionPolicy& policy) {
  QuadratureResult out;
  if (!(b > a)) return out;
  real_t l1 = 0.0;
  out.value = Kronrod::integrate(f, a, b, kMaxDepth, policy.quadrature_tol * 1e-3,
                                 &out.error_estimate, &l1);
  if (!std::isfinite(out.error_estimate) ||
      out.error_estimate > policy.quadrature_tol * std::max(1.0, l1)) {
    std::ostringstream msg;
    msg << "theta quadrature on [" << a << ", " << b << "] did not reach tolerance (error "
        << out.error_estimate << ")";
    throw QuadratureFailure(msg.str());
  }
  return out;
}

complex_t power(real_t t, complex_t p) { return std::exp(p * std::log(t)); }

// int_0^inf [theta(z, it) - 1] t^{alpha/2 - 1} dt for 0 < z < 1, Re alpha > 0.
QuadratureResult pair_integral(complex_t alpha, real_t z, const PrecisionPolicy& policy) {
  const complex_t p = 0.5 * alpha;
  // (0, 1]: int theta t^{p-1} dt - 1/p, with t = e^{-u}.
  const real_t dist = std::min(z, 1.0 - z);
  const real_t u_max = lower_cut(dist, p.real());
  const auto near = integrate(
      [&](real_t u) {
        const real_t t = std::exp(-u);
        return modular_sum(z, t, false) / std::sqrt(t) * std::exp(-u * p);
      },
      0.0, u_max, policy);
  // [1, inf): exponentially decaying.
  const auto far = integrate([&](real_t t) { return direct_tail(z, t) * power(t, p - 1.0); }, 1.0,
                             upper_cut(p.real() - 1.0), policy);
  return {near.value - 1.0 / p + far.value, near.error_estimate + far.error_estimate};
}

// f(s) from the theta integrals on (0, 1] and [1, inf); the sum equals 2 pi^{-s/2} Gamma(s/2) zeta(s).
QuadratureResult f_integral(complex_t s, const PrecisionPolicy& policy) {
  const complex_t p = 0.5 * s;
  const real_t u_max = lower_cut(1.0, p.real() - 0.5);
  // On (0, 1] theta(0, it) - t^{-1/2} decays like t^{-1/2} e^{-pi/t}.
  const auto near = integrate(
      [&](real_t u) { return theta0_minus_sqrt(std::exp(-u)) * std::exp(-u * p); }, 0.0, u_max,
      policy);
  // On [1, inf) theta(0, it) - 1 decays like 2 e^{-pi t}.
  const auto far = integrate([&](real_t t) { return theta0_minus_one(t) * power(t, p - 1.0); },
                             1.0, upper_cut(p.real() - 1.0), policy);

  // Both sign ranges of Re s reduce to the same power-law corrections: for
  // 0 < Re s < 1 the -1 removes int_0^1 t^{p-1} = 1/p and the -t^{-1/2} at
  // infinity removes int_1^inf t^{p-3/2} = 2/(1-s); for Re s < 0 the leftover
  // (1 - t^{-1/2}) t^{p-1} on [1, inf) integrates to -1/p - 2/(1-s).
  QuadratureResult out{near.value + far.value, near.error_estimate + far.error_estimate};
  out.value += -1.0 / p - 2.0 / (1.0 - s);
  return out;
}

void check_gamma_half_pole(complex_t s, const PrecisionPolicy& policy) {
  const real_t nearest = std::round(s.real());
  if (nearest <= 0.0 && std::fmod(-nearest, 2.0) == 0.0 &&
      std::abs(s - complex_t(nearest, 0.0)) <= policy.pole_exclusion_radius) {
    throw PoleProximity("Gamma(s/2) pole at s = " + std::to_string(static_cast<int>(nearest)));
  }
}

}  // namespace

real_t jacobi_theta(real_t z, real_t t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("jacobi_theta needs t > 0");
  if (t >= 1.0) return 1.0 + direct_tail(z, t);
  return modular_sum(z, t, false) / std::sqrt(t);
}

complex_t hurwitz_pair_via_theta(complex_t alpha, real_t z, const PrecisionPolicy& policy) {
  if (!(alpha.real() > 0.0)) throw DomainError("hurwitz_pair_via_theta needs Re alpha > 0");
  if (!(z > 0.0 && z < 1.0)) throw DomainError("hurwitz_pair_via_theta needs 0 < z < 1");
  // Gamma((1 - alpha)/2) has poles at alpha = 1, 3, 5, ...
  const real_t nearest = std::round(alpha.real());
  if (nearest >= 1.0 && std::fmod(nearest, 2.0) == 1.0 &&
      std::abs(alpha - complex_t(nearest, 0.0)) <= policy.pole_exclusion_radius)
    throw PoleProximity("Gamma((1 - alpha)/2) pole");
  const complex_t w = 0.5 * (1.0 - alpha);
  const complex_t prefactor = std::exp(-w * kLnPi) * gamma(w, policy);
  return pair_integral(alpha, z, policy).value / prefactor;
}

QuadratureResult energy_via_theta_evaluate(complex_t s, real_t delta,
                                           const PrecisionPolicy& policy) {
  if (!(s.real() < 1.0)) throw DomainError("energy_via_theta needs Re s < 1");
  if (std::abs(s.real()) < kBranchStrip)
    throw BranchBoundary("energy_via_theta: |Re s| < 1e-3 lies between the two f(s) branches");
  check_gamma_half_pole(s, policy);
  const LatticeParams lattice = LatticeParams::from_delta(delta);

  const auto pair = pair_integral(1.0 - s, lattice.shift, policy);
  const auto f = f_integral(s, policy);
  const complex_t completion = std::exp(-0.5 * s * kLnPi) * gamma(0.5 * s, policy);
  const complex_t scale = std::exp(-(s + 1.0) * kLn2) / completion;
  return {scale * (pair.value + f.value),
          std::abs(scale) * (pair.error_estimate + f.error_estimate)};
}

complex_t energy_via_theta(complex_t s, real_t delta, const PrecisionPolicy& policy) {
  return energy_via_theta_evaluate(s, delta, policy).value;
}

}  // namespace latzeta

#include <array>
#include <cmath>
#include <sstream>

#include "latzeta/errors.hpp"
#include "latzeta/zeta_kernel.hpp"

namespace latzeta {

namespace {

// Lanczos coefficients for g = 607/128 (Godfrey).
constexpr real_t kLanczosG = 607.0 / 128.0;
constexpr std::array<real_t, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};
constexpr real_t kSqrt2Pi = 2.5066282746310005024;

// log Gamma(z) for Re z >= 1/2.
complex_t lanczos_log_gamma(complex_t z) {
  complex_t series = kLanczos[0];
  for (std::size_t j = 1; j < kLanczos.size(); ++j) series += kLanczos[j] / (z + static_cast<real_t>(j));
  const complex_t t = z + kLanczosG + 0.5;
  return (z + 0.5) * std::log(t) - t + std::log(kSqrt2Pi * series / z);
}

// sin(pi z) with the real part reduced modulo 2 before scaling by pi.
complex_t sin_pi(complex_t z) {
  const real_t shift = 2.0 * std::round(0.5 * z.real());
  return std::sin(kPi * complex_t(z.real() - shift, z.imag()));
}

complex_t cot_pi(complex_t z) {
  const real_t shift = std::round(z.real());
  const complex_t r = kPi * complex_t(z.real() - shift, z.imag());
  return std::cos(r) / std::sin(r);
}

void check_gamma_pole(complex_t z, const PrecisionPolicy& policy) {
  if (z.real() > 0.5) return;
  const real_t nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - complex_t(nearest, 0.0)) <= policy.pole_exclusion_radius) {
    std::ostringstream msg;
    msg << "Gamma pole at " << nearest << " (argument " << z << ")";
    throw PoleProximity(msg.str());
  }
}

}  // namespace

complex_t log_gamma(complex_t s, const PrecisionPolicy& policy) {
  check_gamma_pole(s, policy);
  if (s.real() >= 0.5) return lanczos_log_gamma(s);
  return kLnPi - std::log(sin_pi(s)) - lanczos_log_gamma(1.0 - s);
}

complex_t gamma(complex_t s, const PrecisionPolicy& policy) {
  check_gamma_pole(s, policy);
  if (s.real() >= 0.5) return std::exp(lanczos_log_gamma(s));
  return kPi / (sin_pi(s) * std::exp(lanczos_log_gamma(1.0 - s)));
}

complex_t digamma(complex_t s, const PrecisionPolicy& policy) {
  check_gamma_pole(s, policy);
  if (s.real() < 0.5) return digamma(1.0 - s, policy) - kPi * cot_pi(s);

  complex_t z = s;
  complex_t acc = 0.0;
  while (std::abs(z) < 12.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // psi(z) ~ ln z - 1/(2z) - sum B_{2k} / (2k z^{2k})
  static const auto bern = bernoulli_numbers(10);
  const complex_t inv_z2 = 1.0 / (z * z);
  complex_t power = inv_z2;
  complex_t series = 0.0;
  for (int k = 1; k <= 10; ++k) {
    series += bern[static_cast<std::size_t>(k - 1)] / (2.0 * k) * power;
    power *= inv_z2;
  }
  return acc + std::log(z) - 0.5 / z - series;
}

}  // namespace latzeta

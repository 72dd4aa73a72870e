#include "latzeta/zeta_kernel.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <sstream>
#include <type_traits>

#include "latzeta/errors.hpp"
#include "latzeta/simd/power_sum.hpp"

namespace latzeta {

namespace {

constexpr int kMaxBernoulli = 60;
constexpr int kMaxHeadRetries = 3;
constexpr real_t kEps = std::numeric_limits<real_t>::epsilon();

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

struct BernoulliTables {
  std::vector<real_t> numbers;       // B_2 .. B_120
  std::vector<real_t> coefficients;  // B_{2j} / (2j)!
};

// B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k, carried out in exact rationals.
BernoulliTables build_bernoulli_tables() {
  const int top = 2 * kMaxBernoulli;
  std::vector<rational> b(static_cast<std::size_t>(top) + 1);
  b[0] = 1;
  for (int m = 1; m <= top; ++m) {
    rational acc = 0;
    bigint binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      acc += rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  BernoulliTables tables;
  bigint factorial = 1;
  for (int j = 1; j <= kMaxBernoulli; ++j) {
    factorial *= (2 * j - 1);
    factorial *= (2 * j);
    const rational& b2j = b[static_cast<std::size_t>(2 * j)];
    tables.numbers.push_back(static_cast<real_t>(b2j));
    tables.coefficients.push_back(static_cast<real_t>(rational(b2j / rational(factorial))));
  }
  return tables;
}

const BernoulliTables& bernoulli_tables() {
  static const BernoulliTables tables = build_bernoulli_tables();
  return tables;
}

void check_args(const HurwitzArgs& args, const PrecisionPolicy& policy) {
  if (!std::isfinite(args.a) || args.a <= 0.0) {
    std::ostringstream msg;
    msg << "Hurwitz shift must be positive, got a = " << args.a;
    throw DomainError(msg.str());
  }
  if (!std::isfinite(args.s.real()) || !std::isfinite(args.s.imag()))
    throw DomainError("non-finite zeta argument");
  detail::check_pole(args.s, policy);
}

}  // namespace

void PrecisionPolicy::validate() const {
  if (!(target_abs_err > 0.0)) throw DomainError("target_abs_err must be positive");
  if (em_direct_terms < 1 || em_bernoulli_terms < 1)
    throw DomainError("Euler-Maclaurin term counts must be positive");
  if (em_bernoulli_terms > kMaxBernoulli) throw DomainError("at most 60 Bernoulli corrections");
  if (!(newton_tol > 0.0) || !(pole_exclusion_radius > 0.0) || !(quadrature_tol > 0.0))
    throw DomainError("tolerances must be positive");
}

namespace detail {

const std::vector<real_t>& euler_maclaurin_coefficients() { return bernoulli_tables().coefficients; }

std::size_t dirichlet_terms(real_t sigma, real_t tail_tol) {
  // sum_{n>M} n^{-sigma} <= M^{1-sigma} / (sigma - 1)
  const real_t excess = sigma - 1.0;
  const real_t log_m = (std::log(1.0 / tail_tol) - std::log(excess)) / excess;
  const real_t m = std::ceil(std::exp(std::min(log_m, 20.0)));
  return static_cast<std::size_t>(std::clamp(m, 8.0, 1.0e6));
}

void check_pole(complex_t s, const PrecisionPolicy& policy) {
  if (std::abs(s - 1.0) <= policy.pole_exclusion_radius) {
    std::ostringstream msg;
    msg << "argument " << s << " lies within " << policy.pole_exclusion_radius
        << " of the pole at s = 1";
    throw PoleProximity(msg.str());
  }
}

}  // namespace detail

std::vector<real_t> bernoulli_numbers(int count) {
  if (count < 1 || count > kMaxBernoulli)
    throw DomainError("bernoulli_numbers: count must lie in [1, 60]");
  const auto& all = bernoulli_tables().numbers;
  return {all.begin(), all.begin() + count};
}

namespace zeta_routes {

namespace {

struct EmPass {
  complex_t value{};
  complex_t derivative{};
  real_t omitted = 0.0;
  real_t scale = 0.0;
  bool converged = false;
};

// One Euler-Maclaurin pass with head length `head`. For Re s < 0 the head sum
// and the integral term are large and nearly cancel, so that case runs in
// extended precision (T = long double) with a scalar head loop.
template <typename T>
EmPass em_pass(complex_t s_in, real_t a, int head, int max_j, real_t target_abs_err,
               bool with_derivative) {
  using cx = std::complex<T>;
  const auto& coeff = detail::euler_maclaurin_coefficients();
  const cx s(s_in.real(), s_in.imag());
  const cx one(1);

  cx head_sum{}, head_log_sum{};
  if constexpr (std::is_same_v<T, real_t>) {
    const auto sums = simd::weighted_power_sum(
        simd::Progression{a, 1.0, static_cast<std::size_t>(head)}, {}, s_in, with_derivative);
    head_sum = sums.sum;
    head_log_sum = sums.log_sum;
  } else {
    for (int n = head - 1; n >= 0; --n) {
      const T log_base = std::log(static_cast<T>(n) + static_cast<T>(a));
      const cx term = std::exp(-s * log_base);
      head_sum += term;
      if (with_derivative) head_log_sum += log_base * term;
    }
  }

  const T x = static_cast<T>(head) + static_cast<T>(a);
  const T log_x = std::log(x);
  const cx x_pow = std::exp(-s * log_x);  // x^{-s}
  const cx tail = x * x_pow / (s - one);

  cx value = head_sum + tail + T(0.5) * x_pow;
  cx deriv{};
  if (with_derivative)
    deriv = -head_log_sum - log_x * tail - tail / (s - one) - T(0.5) * log_x * x_pow;

  EmPass out;
  out.scale = static_cast<real_t>(std::max({std::abs(head_sum), std::abs(tail), T(1)}));

  // Rising factorial (s)_{2j-1} and x^{-s-2j+1}, with their s-derivatives.
  cx rising = s;
  cx rising_ds = one;
  cx power = x_pow / x;
  const T inv_x2 = T(1) / (x * x);
  for (int j = 1; j <= max_j; ++j) {
    const T c = static_cast<T>(coeff[static_cast<std::size_t>(j - 1)]);
    const cx term = c * rising * power;
    // Remainder after truncating before term j is bounded by
    // |s + 2j - 1| / (Re s + 2j - 1) times |term| once Re s + 2j - 1 > 0.
    const T margin = s.real() + static_cast<T>(2 * j - 1);
    const T bound = margin > T(0) ? std::abs(term) * std::abs(s + static_cast<T>(2 * j - 1)) / margin
                                  : std::numeric_limits<T>::infinity();
    out.omitted = static_cast<real_t>(std::min(bound, std::abs(term) * T(1e6)));
    // Measured against the running value, which has shed the head/tail
    // cancellation by the time the corrections are small.
    if (bound < T(0.1) * static_cast<T>(target_abs_err) * std::max(T(1), std::abs(value))) {
      out.converged = true;
      break;
    }
    value += term;
    if (with_derivative) deriv += c * (rising_ds - log_x * rising) * power;
    const cx f1 = s + static_cast<T>(2 * j - 1);
    const cx f2 = s + static_cast<T>(2 * j);
    rising_ds = rising_ds * f1 * f2 + rising * (f1 + f2);
    rising *= f1 * f2;
    power *= inv_x2;
  }
  out.value = complex_t(static_cast<real_t>(value.real()), static_cast<real_t>(value.imag()));
  out.derivative =
      complex_t(static_cast<real_t>(deriv.real()), static_cast<real_t>(deriv.imag()));
  return out;
}

}  // namespace

ZetaEvaluation euler_maclaurin(const HurwitzArgs& args, const PrecisionPolicy& policy,
                               bool with_derivative, int forced_terms) {
  check_args(args, policy);
  const complex_t s = args.s;
  const int max_j = std::min(policy.em_bernoulli_terms, kMaxBernoulli);
  const bool extended = s.real() < 0.0;
  // Rounding of the head sum relative to its own magnitude.
  const real_t unit = extended ? static_cast<real_t>(std::numeric_limits<long double>::epsilon())
                               : kEps;

  int head = forced_terms > 0
                 ? forced_terms
                 : std::max(policy.em_direct_terms,
                            static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))));
  const int retries = forced_terms > 0 ? 0 : kMaxHeadRetries;

  ZetaEvaluation out;
  for (int attempt = 0; attempt <= retries; ++attempt, head *= 2) {
    const EmPass pass =
        extended ? em_pass<long double>(s, args.a, head, max_j, policy.target_abs_err,
                                        with_derivative)
                 : em_pass<real_t>(s, args.a, head, max_j, policy.target_abs_err,
                                   with_derivative);
    out.value = pass.value;
    out.derivative = pass.derivative;
    out.scale = pass.scale;
    out.error_estimate = pass.omitted + 4.0 * unit * pass.scale * std::sqrt(static_cast<real_t>(head)) +
                         kEps * std::abs(pass.value);
    if (pass.converged) break;
  }
  return out;
}

ZetaEvaluation functional_equation(const HurwitzArgs& args, const PrecisionPolicy& policy,
                                   bool with_derivative) {
  check_args(args, policy);
  if (args.s.real() >= 0.0)
    throw DomainError("functional-equation route needs Re s < 0");

  const complex_t s = args.s;
  const complex_t w = 1.0 - s;

  // Reduce the shift into (0, 1]; the removed head terms are small powers.
  const real_t shift_count = std::max(0.0, std::ceil(args.a) - 1.0);
  const real_t a = args.a - shift_count;

  const std::size_t terms = detail::dirichlet_terms(w.real(), 1e-17);
  std::vector<real_t> cos_w(terms), sin_w(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    const real_t na = static_cast<real_t>(i + 1) * a;
    const real_t frac = na - std::floor(na);
    cos_w[i] = std::cos(2.0 * kPi * frac);
    sin_w[i] = std::sin(2.0 * kPi * frac);
  }
  const simd::Progression naturals{1.0, 1.0, terms};
  const auto c_sum = simd::weighted_power_sum(naturals, cos_w, w, with_derivative);
  const auto s_sum = simd::weighted_power_sum(naturals, sin_w, w, with_derivative);

  // 2 Gamma(w) (2 pi)^{-w}, formed in log space to survive large Re w.
  const complex_t prefactor = std::exp(log_gamma(w, policy) + kLn2 - w * kLn2Pi);
  const complex_t phase = 0.5 * kPi * w;
  const complex_t cos_phase = std::cos(phase);
  const complex_t sin_phase = std::sin(phase);

  const complex_t bracket = cos_phase * c_sum.sum + sin_phase * s_sum.sum;
  ZetaEvaluation out;
  out.value = prefactor * bracket;
  const real_t zeta_bound = 1.0 + 1.0 / (w.real() - 1.0);
  out.scale = std::abs(prefactor) * (std::abs(cos_phase) + std::abs(sin_phase)) * zeta_bound;
  out.error_estimate = 8.0 * kEps * out.scale * (1.0 + std::abs(w));

  if (with_derivative) {
    const complex_t psi = digamma(w, policy);
    const complex_t d_bracket_dw = 0.5 * kPi * (-sin_phase * c_sum.sum + cos_phase * s_sum.sum) -
                                   (cos_phase * c_sum.log_sum + sin_phase * s_sum.log_sum);
    const complex_t d_dw = prefactor * ((psi - kLn2Pi) * bracket + d_bracket_dw);
    out.derivative = -d_dw;
  }

  if (shift_count > 0.0) {
    const auto removed = simd::weighted_power_sum(
        simd::Progression{a, 1.0, static_cast<std::size_t>(shift_count)}, {}, s, with_derivative);
    out.value -= removed.sum;
    out.derivative += removed.log_sum;
    out.scale = std::max(out.scale, std::abs(removed.sum));
  }
  return out;
}

}  // namespace zeta_routes

ZetaEvaluation hurwitz_zeta_evaluate(const HurwitzArgs& args, const PrecisionPolicy& policy,
                                     bool with_derivative) {
  if (args.s.real() < policy.reflection_threshold && args.s.real() < 0.0)
    return zeta_routes::functional_equation(args, policy, with_derivative);
  return zeta_routes::euler_maclaurin(args, policy, with_derivative);
}

complex_t hurwitz_zeta(const HurwitzArgs& args, const PrecisionPolicy& policy) {
  return hurwitz_zeta_evaluate(args, policy, false).value;
}

complex_t hurwitz_zeta_ds(const HurwitzArgs& args, const PrecisionPolicy& policy) {
  return hurwitz_zeta_evaluate(args, policy, true).derivative;
}

complex_t riemann_zeta(complex_t s, const PrecisionPolicy& policy) {
  return hurwitz_zeta({s, 1.0}, policy);
}

complex_t riemann_zeta_ds(complex_t s, const PrecisionPolicy& policy) {
  return hurwitz_zeta_ds({s, 1.0}, policy);
}

complex_t duality_residual(complex_t s, const PrecisionPolicy& policy) {
  const real_t r = policy.pole_exclusion_radius;
  // Gamma(s/2) has poles at 0, -2, -4, ...; Gamma((1-s)/2) at 1, 3, 5, ...
  const real_t nearest = std::round(s.real());
  if (std::abs(s - complex_t(nearest, 0.0)) <= r) {
    const bool even_nonpositive = nearest <= 0.0 && std::fmod(-nearest, 2.0) == 0.0;
    const bool odd_positive = nearest >= 1.0 && std::fmod(nearest, 2.0) == 1.0;
    if (even_nonpositive || odd_positive)
      throw PoleProximity("duality_residual: argument at a pole of the completed zeta");
  }
  const auto completed = [&](complex_t z) {
    return std::exp(-0.5 * z * kLnPi) * gamma(0.5 * z, policy) * riemann_zeta(z, policy);
  };
  return completed(s) - completed(1.0 - s);
}

}  // namespace latzeta

#include "latzeta/validation.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <random>
#include <sstream>

#include "latzeta/lattice_energy.hpp"
#include "latzeta/theta_validation.hpp"
#include "latzeta/zeta_kernel.hpp"

namespace latzeta {

namespace {

class Tracker {
 public:
  Tracker(std::string name, real_t threshold) {
    result_.name = std::move(name);
    result_.threshold = threshold;
  }

  void record(real_t diff, std::initializer_list<real_t> magnitudes, const std::string& where) {
    real_t scale = 1.0;
    for (real_t m : magnitudes) scale = std::max(scale, m);
    const real_t residual = diff / scale;
    ++result_.cases;
    if (!(residual <= result_.worst_residual)) {
      result_.worst_residual = residual;
      result_.worst_case = where;
    }
  }

  SuiteResult finish() {
    result_.pass = result_.cases > 0 && result_.worst_residual <= result_.threshold;
    return result_;
  }

 private:
  SuiteResult result_;
};

std::string where(complex_t s, const std::string& extra) {
  std::ostringstream out;
  out.precision(6);
  out << "s=" << s.real() << (s.imag() < 0 ? "" : "+") << s.imag() << "i " << extra;
  return out.str();
}

complex_t cpow(real_t base, complex_t s) { return pow_real_base(base, s); }

}  // namespace

std::vector<complex_t> identity_sample() {
  std::mt19937_64 rng(0x5eed2024);
  std::uniform_real_distribution<real_t> re(-10.0, 10.0), im(-30.0, 30.0);
  std::vector<complex_t> out;
  while (out.size() < 20) {
    const complex_t s(re(rng), im(rng));
    if (std::abs(s - 1.0) > 1e-3) out.push_back(s);
  }
  return out;
}

complex_t energy_unfolded(complex_t s, real_t delta, const PrecisionPolicy& policy) {
  const real_t z = 1.0 / (1.0 + delta);
  const real_t zc = delta / (1.0 + delta);
  const complex_t p = std::exp(-s * kLn2);
  return p * riemann_zeta(s, policy) +
         0.5 * p * (hurwitz_zeta({s, z}, policy) + hurwitz_zeta({s, zc}, policy));
}

SuiteResult identity_suite(const PrecisionPolicy& policy) {
  Tracker t("identities", 1e-10);
  for (const complex_t s : identity_sample()) {
    const complex_t zeta = riemann_zeta(s, policy);
    const auto hz = [&](real_t a) { return hurwitz_zeta({s, a}, policy); };
    for (const real_t x : {0.1, 0.25, 0.4}) {
      const complex_t a = hz(x), b = hz(0.5 + x), c = cpow(2.0, s) * hz(2.0 * x);
      t.record(std::abs(a + b - c), {std::abs(a), std::abs(b), std::abs(c)},
               where(s, "shift x=" + std::to_string(x)));
    }
    for (int k = 2; k <= 5; ++k) {
      const complex_t lhs = cpow(k, s) * zeta;
      complex_t rhs{};
      real_t biggest = std::abs(lhs);
      for (int n = 1; n <= k; ++n) {
        const complex_t term = hz(static_cast<real_t>(n) / k);
        rhs += term;
        biggest = std::max(biggest, std::abs(term));
      }
      t.record(std::abs(lhs - rhs), {biggest}, where(s, "multiplication k=" + std::to_string(k)));
    }
    const complex_t third = hz(1.0 / 3.0) + hz(2.0 / 3.0);
    const complex_t third_rhs = (cpow(3.0, s) - 1.0) * zeta;
    t.record(std::abs(third - third_rhs), {std::abs(hz(1.0 / 3.0)), std::abs(third_rhs)},
             where(s, "thirds"));
    const complex_t half = hz(0.5), half_rhs = (cpow(2.0, s) - 1.0) * zeta;
    t.record(std::abs(half - half_rhs), {std::abs(half), std::abs(half_rhs)}, where(s, "half"));
    const complex_t quarter = hz(0.25) + hz(0.75);
    const complex_t quarter_rhs = (cpow(4.0, s) - cpow(2.0, s)) * zeta;
    t.record(std::abs(quarter - quarter_rhs), {std::abs(hz(0.25)), std::abs(quarter_rhs)},
             where(s, "quarters"));
  }
  return t.finish();
}

SuiteResult factorization_suite(const PrecisionPolicy& policy) {
  Tracker t("factorization", 1e-10);
  for (const complex_t s : identity_sample()) {
    for (const real_t delta : {1.0 / 5.0, 1.0 / 3.0, 1.0 / 2.0, 1.0}) {
      const complex_t e = energy(s, delta, policy);
      const complex_t f = energy_factorized(s, delta, policy);
      const complex_t p = std::exp(-s * kLn2);
      const real_t z = 1.0 / (1.0 + delta);
      const real_t terms = std::max({std::abs(p * riemann_zeta(s, policy)),
                                     std::abs(0.5 * p * hurwitz_zeta({s, z}, policy)),
                                     std::abs(0.5 * p * hurwitz_zeta({s, 1.0 - z}, policy))});
      t.record(std::abs(e - f), {std::abs(e), std::abs(f), terms},
               where(s, "delta=" + std::to_string(delta)));
    }
  }
  return t.finish();
}

SuiteResult theta_suite(const PrecisionPolicy& policy) {
  Tracker t("theta", 1e-8);
  const complex_t points[] = {{0.5, 0.0},  {-0.5, 2.0}, {0.3, 9.5},   {-2.5, -7.0}, {0.8, 4.0},
                              {-1.3, 10.0}, {-4.7, 3.0}, {0.05, -6.0}, {-0.2, 0.7},  {-7.5, 8.0}};
  for (const real_t delta : {0.4, 0.75}) {
    for (const complex_t s : points) {
      const complex_t theta = energy_via_theta(s, delta, policy);
      const complex_t e = energy(s, delta, policy);
      // Absolute agreement is the contract here; no rescaling.
      t.record(std::abs(theta - e), {}, where(s, "delta=" + std::to_string(delta)));
    }
  }
  return t.finish();
}

SuiteResult duality_suite(const PrecisionPolicy& policy) {
  Tracker t("duality", 1e-10);
  std::mt19937_64 rng(0xd0a1);
  std::uniform_real_distribution<real_t> re(-9.9, 10.9), im(-30.0, 30.0);
  std::vector<complex_t> points = {{0.3, 0.0}, {0.5, 7.0}, {-3.2, 11.0}};
  while (points.size() < 23) points.emplace_back(re(rng), im(rng));
  for (const complex_t s : points) {
    const auto completed = [&](complex_t z) {
      return std::exp(-0.5 * z * kLnPi) * gamma(0.5 * z, policy) * riemann_zeta(z, policy);
    };
    const complex_t a = completed(s), b = completed(1.0 - s);
    t.record(std::abs(duality_residual(s, policy)), {std::abs(a), std::abs(b)}, where(s, ""));
  }
  return t.finish();
}

SuiteResult symmetry_suite(const PrecisionPolicy& policy) {
  Tracker t("symmetry", 1e-10);
  std::mt19937_64 rng(0x5117);
  std::uniform_real_distribution<real_t> re(-10.0, 10.0), im(-30.0, 30.0);
  for (const real_t delta : {0.2, 0.5, 0.8}) {
    for (int i = 0; i < 10; ++i) {
      const complex_t s(re(rng), im(rng));
      if (std::abs(s - 1.0) < 1e-3) continue;
      const complex_t a = energy_unfolded(s, delta, policy);
      const complex_t b = energy_unfolded(s, 1.0 / delta, policy);
      t.record(std::abs(a - b), {std::abs(a), std::abs(b)},
               where(s, "delta=" + std::to_string(delta)));
    }
  }
  return t.finish();
}

SuiteResult residue_suite(const PrecisionPolicy& policy) {
  Tracker t("residue", 1e-6);
  for (const real_t delta : {0.3, 0.7, 1.0}) {
    const real_t limit =
        extrapolated_residue([&](complex_t s) { return energy(s, delta, policy); });
    t.record(std::abs(limit - 1.0), {}, "delta=" + std::to_string(delta));
  }
  const real_t zeta_limit = extrapolated_residue([&](complex_t s) { return riemann_zeta(s, policy); });
  t.record(std::abs(zeta_limit - 1.0), {}, "zeta");
  return t.finish();
}

std::vector<SuiteResult> run_validation_suites(const PrecisionPolicy& policy) {
  return {identity_suite(policy), factorization_suite(policy), theta_suite(policy),
          duality_suite(policy),  symmetry_suite(policy),      residue_suite(policy)};
}

}  // namespace latzeta

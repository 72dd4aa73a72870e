#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "latzeta/simd/power_sum.hpp"
#include "support.hpp"

using namespace latzeta;
using namespace latzeta::simd;

TEST_SUITE("simd") {

TEST_CASE("scalar kernel matches a naive loop") {
  const Progression p{0.3, 2.0, 37};
  const complex_t s(1.7, -4.2);
  complex_t sum{}, log_sum{};
  for (std::size_t i = 0; i < p.count; ++i) {
    const real_t x = p.at(i);
    const complex_t term = std::exp(-s * std::log(x));
    sum += term;
    log_sum += std::log(x) * term;
  }
  const auto got = scalar::weighted_power_sum(p, {}, s, true);
  CHECK(testing::rel_err(got.sum, sum) < 1e-14);
  CHECK(testing::rel_err(got.log_sum, log_sum) < 1e-14);
}

TEST_CASE("dispatch honours the forced isa") {
  const Progression p{1.0, 1.0, 10};
  const auto a = weighted_power_sum(Isa::scalar, p, {}, complex_t(2.0, 0.0), false);
  CHECK(std::abs(a.sum - complex_t(1.5497677311665408, 0.0)) < 1e-14);
  CHECK(a.log_sum == complex_t{});
  CHECK((active_isa() == Isa::scalar || avx2_available()));
}

#if defined(LATZETA_HAVE_AVX2)
TEST_CASE("avx2 power sums agree with the scalar reference") {
  if (!avx2_available()) return;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<real_t> off(0.01, 3.0), stride(0.1, 4.0), re(-12.0, 12.0),
      im(-120.0, 120.0), w(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Progression p{off(rng), stride(rng), static_cast<std::size_t>(trial % 67)};
    std::vector<real_t> weights(p.count);
    for (auto& x : weights) x = w(rng);
    const complex_t s(re(rng), im(rng));
    const auto ref = scalar::weighted_power_sum(p, weights, s, true);
    const auto got = avx2::weighted_power_sum(p, weights, s, true);
    // Per term, an ulp in ln x moves the phase by |t| ulp(ln x) and the
    // modulus by |sigma| ulp(ln x); bound the difference by that times the
    // sum of magnitudes.
    real_t mag = 0.0, log_mag = 0.0, max_log = 1.0;
    for (std::size_t i = 0; i < p.count; ++i) {
      const real_t x = p.at(i);
      mag += std::abs(weights[i]) * std::pow(x, -s.real());
      log_mag += std::abs(weights[i] * std::log(x)) * std::pow(x, -s.real());
      max_log = std::max(max_log, std::abs(std::log(x)));
    }
    const real_t amplification = 8.0 + std::abs(s) * max_log;
    CAPTURE(s);
    CHECK(std::abs(got.sum - ref.sum) <= 1e-15 * amplification * mag + 1e-300);
    CHECK(std::abs(got.log_sum - ref.log_sum) <= 1e-15 * amplification * log_mag + 1e-300);
  }
}

TEST_CASE("avx2 elementary functions are within a few ulp of libm") {
  if (!avx2_available()) return;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<real_t> pos(-300.0, 300.0), arg(-700.0, 700.0),
      phase(-1e5, 1e5);
  for (int trial = 0; trial < 2000; ++trial) {
    real_t x[4], y[4], c[4];
    for (auto& v : x) v = std::exp2(pos(rng) / 10.0) * 1.37;
    avx2::log4(x, y);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(y[i] - std::log(x[i])) <= 4e-16 * std::max(1.0, std::abs(std::log(x[i]))));

    for (auto& v : x) v = arg(rng);
    avx2::exp4(x, y);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(y[i] - std::exp(x[i])) <= 4e-16 * std::exp(x[i]));

    for (auto& v : x) v = phase(rng);
    avx2::sincos4(x, y, c);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(y[i] - std::sin(x[i])) <= 1e-15);
      CHECK(std::abs(c[i] - std::cos(x[i])) <= 1e-15);
    }
  }
}
#endif

}

#include <cmath>

#include "doctest.h"
#include "latzeta/asymptotics.hpp"
#include "latzeta/continuation.hpp"
#include "latzeta/errors.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace latzeta;

TEST_SUITE("asymptotics") {

TEST_CASE("constants") {
  CHECK(deviation_exponent() == doctest::Approx(2.0 * std::log(3.0) / kLn2));
  CHECK(deviation_exponent() == doctest::Approx(3.1699250014423126));
  CHECK(limiting_ordinate(0) == doctest::Approx(kPi / kLn2));
  CHECK(limiting_ordinate(2) == doctest::Approx(5.0 * kPi / kLn2));
}

TEST_CASE("prediction tracks the traced zeros") {
  for (std::size_t i = 1; i < std::size(oracle::zero_cases); ++i) {
    const auto& c = oracle::zero_cases[i];
    const real_t eps = 1.0 - c.delta;
    const auto p = predict(0, eps);
    CAPTURE(eps);
    CHECK(std::abs(smooth_rho_x(eps) - c.rho.real()) < 1e-3);
    CHECK(std::abs(p.rho_y_pred - c.rho.imag()) < 1e-5);
    const auto [dx, dy] = measured_deviations(0, eps, c.rho);
    CHECK(std::abs(dy - p.delta_rho_y) <= 0.1 * std::abs(p.delta_rho_y) + 2e-7);
    (void)dx;
  }
}

TEST_CASE("reduced equation") {
  for (const real_t eps : {0.02, 0.005}) {
    const complex_t rho = solve_reduced_equation(0, eps, {});
    CHECK(std::abs(reduced_equation_residual(rho, eps, {})) < 1e-12);
    const auto& traced = eps == 0.02 ? oracle::zero_cases[1] : oracle::zero_cases[3];
    CHECK(std::abs(rho - traced.rho) < 1e-6);
  }
  CHECK_THROWS_AS((void)solve_reduced_equation(0, 0.1, {}), DomainError);
}

TEST_CASE("power-law fit") {
  std::vector<std::pair<real_t, real_t>> pts;
  for (const real_t e : {0.02, 0.01, 0.005, 0.0025}) pts.emplace_back(e, 3.0 * std::pow(e, 3.17));
  CHECK(fit_power_law(pts) == doctest::Approx(3.17).epsilon(1e-12));
}

TEST_CASE("deviation table") {
  const auto rows = deviation_table({0}, {0.02, 0.01, 0.005}, {});
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.fitted_exponent > 3.02);
    CHECK(r.fitted_exponent < 3.32);
  }
  const auto& last = rows.back();
  CHECK(std::abs(last.measured_drho_y - last.predicted_drho_y) <= 0.1 * std::abs(last.predicted_drho_y));
  CHECK(std::abs(last.measured_drho_y - (oracle::zero_cases[3].rho.imag() - limiting_ordinate(0))) < 1e-9);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS((void)predict(0, 0.0), DomainError);
  CHECK_THROWS_AS((void)predict(0, 0.7), DomainError);
  CHECK_THROWS_AS((void)deviation_table({0}, {0.0}, {}), DomainError);
  BranchCurve tiny;
  tiny.samples.push_back({0.99, complex_t(-13.0, 4.53), 0.0});
  CHECK_THROWS_AS((void)fit_exponent(tiny, 0), InsufficientSamples);
}

}

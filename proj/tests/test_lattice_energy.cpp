#include <cmath>

#include "doctest.h"
#include "latzeta/errors.hpp"
#include "latzeta/lattice_energy.hpp"
#include "latzeta/zeta_kernel.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace latzeta;
using testing::rel_err;

TEST_SUITE("lattice_energy") {

TEST_CASE("lattice parameters") {
  const auto p = LatticeParams::from_delta(0.5);
  CHECK(p.spacing_long == doctest::Approx(4.0 / 3.0));
  CHECK(p.spacing_short == doctest::Approx(2.0 / 3.0));
  CHECK(p.shift == doctest::Approx(2.0 / 3.0));
  CHECK(p.shift_complement == doctest::Approx(1.0 / 3.0));
  CHECK(p.epsilon == doctest::Approx(0.5));
  CHECK(LatticeParams::from_delta(4.0).delta == 0.25);
  CHECK_THROWS_AS((void)LatticeParams::from_delta(0.0), DomainError);
  CHECK_THROWS_AS((void)LatticeParams::from_delta(-1.0), DomainError);
}

TEST_CASE("energy and derivative against the oracle") {
  for (const auto& c : oracle::energy_cases) {
    CAPTURE(c.s);
    CAPTURE(c.delta);
    CHECK(rel_err(energy(c.s, c.delta), c.value) < 1e-12);
    CHECK(rel_err(energy_ds(c.s, c.delta), c.derivative) < 1e-10);
  }
}

TEST_CASE("square lattice limit and folding") {
  for (const complex_t s : {complex_t(3.0, 0.0), complex_t(0.5, 14.0), complex_t(-5.0, 2.0)}) {
    CHECK(energy(s, 1.0) == riemann_zeta(s));
    CHECK(std::abs(energy(s, 0.4) - energy(s, 2.5)) <= 1e-15 * std::abs(energy(s, 0.4)));
  }
  CHECK(rel_err(energy(3.0, 0.5), 1.75 * oracle::zeta3) < 1e-13);
}

TEST_CASE("direct lattice sum") {
  for (const real_t delta : {0.3, 0.7}) {
    for (const real_t s : {2.0, 3.0, 4.0}) {
      const auto direct = energy_direct_sum(s, delta, 100000);
      CHECK(std::abs(direct.value - energy(s, delta)) <= std::max(direct.error_estimate, 1e-9));
    }
  }
  CHECK_THROWS_AS((void)energy_direct_sum(complex_t(0.9, 0.0), 0.5, 100000), DomainError);
  CHECK_THROWS_AS((void)energy_direct_sum(2.0, 0.5, 10), DomainError);
}

TEST_CASE("factorized forms") {
  CHECK(is_factorizable_delta(1.0 / 3.0));
  CHECK(is_factorizable_delta(0.2));
  CHECK_FALSE(is_factorizable_delta(0.3333333333));
  const complex_t s(0.7, 3.0);
  CHECK(rel_err(factorized_prefactor(s, 0.5), 1.0 + std::pow(3.0, s)) < 1e-15);
  for (const real_t delta : {0.2, 1.0 / 3.0, 0.5, 1.0})
    CHECK(rel_err(energy_factorized(s, delta), energy(s, delta)) < 1e-13);
  CHECK_THROWS_AS((void)energy_factorized(s, 0.4), DomainError);

  // Zeros of the prefactors.
  for (int k = 0; k < 4; ++k) {
    const complex_t rho(0.0, (2 * k + 1) * kPi / std::log(3.0));
    CHECK(std::abs(factorized_prefactor(rho, 0.5)) < 1e-13);
    for (const real_t sign : {1.0, -1.0}) {
      const complex_t root = (std::log(complex_t(0.5, sign * std::sqrt(7.0) / 2.0)) +
                              complex_t(0.0, 2.0 * kPi * k)) / kLn2;
      CHECK(std::abs(factorized_prefactor(root, 1.0 / 3.0)) < 1e-12);
    }
  }
}

TEST_CASE("taylor expansion") {
  const complex_t s(0.3, 2.0);
  const auto t = taylor_expansion(s);
  CHECK(t.eps2 == t.eps3);
  // Exact at eps = 0, and residuals scale like eps^6.
  CHECK(taylor_energy(s, 0.0) == riemann_zeta(s));
  const real_t r1 = std::abs(energy(s, 1.0 - 0.04) - taylor_energy(s, 0.04));
  const real_t r2 = std::abs(energy(s, 1.0 - 0.02) - taylor_energy(s, 0.02));
  CHECK(r1 / r2 > 32.0);
  CHECK(r1 / r2 < 128.0);
  CHECK_THROWS_AS((void)taylor_energy(s, 1.0), DomainError);
  CHECK_THROWS_AS((void)taylor_energy(s, -0.1), DomainError);
  CHECK_THROWS_AS((void)taylor_expansion(complex_t(-1.0, 0.0)), PoleProximity);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS((void)energy(1.0, 0.5), PoleProximity);
  CHECK_THROWS_AS((void)energy(2.0, 0.0), DomainError);
}

}

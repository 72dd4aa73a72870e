#include <cmath>

#include "doctest.h"
#include "latzeta/errors.hpp"
#include "latzeta/lattice_energy.hpp"
#include "latzeta/theta_validation.hpp"
#include "latzeta/zeta_kernel.hpp"
#include "support.hpp"

using namespace latzeta;

TEST_SUITE("theta_validation") {

TEST_CASE("theta series and its modular image agree") {
  // Direct series against the transformed sum straddling t = 1.
  for (const real_t z : {0.1, 0.5, 0.83}) {
    const real_t a = jacobi_theta(z, 0.999999);
    const real_t b = jacobi_theta(z, 1.000001);
    CHECK(std::abs(a - b) < 1e-5);
  }
  // theta(0, t) = t^{-1/2} theta(0, 1/t)
  for (const real_t t : {0.05, 0.3, 2.0, 7.0})
    CHECK(jacobi_theta(0.0, t) == doctest::Approx(jacobi_theta(0.0, 1.0 / t) / std::sqrt(t)).epsilon(1e-14));
  CHECK(jacobi_theta(ThetaArgs{0.25, 1.5}) == jacobi_theta(0.25, 1.5));
}

TEST_CASE("hurwitz pair from the theta integral") {
  for (const complex_t alpha : {complex_t(0.4, 1.0), complex_t(2.3, -4.0), complex_t(0.25, 0.0)}) {
    const real_t z = 0.3;
    const complex_t want = hurwitz_zeta({1.0 - alpha, z}) + hurwitz_zeta({1.0 - alpha, 1.0 - z});
    CAPTURE(alpha);
    CHECK(std::abs(hurwitz_pair_via_theta(alpha, z) - want) < 1e-9 * std::max(1.0, std::abs(want)));
  }
  CHECK_THROWS_AS((void)hurwitz_pair_via_theta(complex_t(-0.5, 1.0), 0.3), DomainError);
  CHECK_THROWS_AS((void)hurwitz_pair_via_theta(complex_t(0.5, 1.0), 1.3), DomainError);
  CHECK_THROWS_AS((void)hurwitz_pair_via_theta(complex_t(3.0, 0.0), 0.3), PoleProximity);
}

TEST_CASE("energy through the theta representation") {
  for (const real_t delta : {0.4, 0.75}) {
    for (const complex_t s : {complex_t(0.5, 0.0), complex_t(-0.5, 2.0), complex_t(0.3, 9.5),
                              complex_t(-2.5, -7.0), complex_t(-6.0, 3.0)}) {
      CAPTURE(s);
      const auto r = energy_via_theta_evaluate(s, delta, {});
      CHECK(std::abs(r.value - energy(s, delta)) < 1e-8);
      CHECK(r.error_estimate < 1e-8);
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS((void)energy_via_theta(complex_t(1.5, 0.0), 0.5), DomainError);
  CHECK_THROWS_AS((void)energy_via_theta(complex_t(1e-4, 3.0), 0.5), BranchBoundary);
  CHECK_THROWS_AS((void)energy_via_theta(complex_t(-2.0, 0.0), 0.5), PoleProximity);
}

}

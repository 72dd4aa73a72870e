#include <cmath>

#include "doctest.h"
#include "latzeta/errors.hpp"
#include "latzeta/lattice_energy.hpp"
#include "latzeta/zero_finder.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace latzeta;

TEST_SUITE("zero_finder") {

TEST_CASE("newton refinement") {
  const auto z = refine_zero(complex_t(0.6, 1.1), 0.2, {});
  CHECK(std::abs(z.rho - oracle::zero_cases[0].rho) < 1e-12);
  CHECK(z.residual <= 1e-12);
  CHECK(classify(z, {}) == ZeroKind::off_critical);

  std::vector<real_t> steps;
  const auto riemann = refine_zero(complex_t(0.5, 14.1), 1.0, {}, &steps);
  CHECK(std::abs(riemann.rho - complex_t(0.5, oracle::zeta_zero1)) < 1e-12);
  CHECK(classify(riemann, {}) == ZeroKind::critical);
  // Quadratic convergence: each step is far below the previous one once close.
  REQUIRE(steps.size() >= 3);
  CHECK(steps[2] < steps[1] * steps[1] * 100.0);

  const auto trivial = refine_zero(complex_t(-2.1, 0.0), 1.0, {});
  CHECK(std::abs(trivial.rho + 2.0) < 1e-12);
  CHECK(classify(trivial, {}) == ZeroKind::trivial);
}

TEST_CASE("argument principle counts") {
  SearchWindow w;
  w.x_min = -1.0; w.x_max = 2.0; w.y_min = 0.5; w.y_max = 15.0;
  // Zeta: one zero (14.13) in the window.
  CHECK(count_zeros(w, 1.0, {}) == 1);
  // Delta = 1/2: 2.86, 8.58, 14.13, 14.30.
  CHECK(count_zeros(w, 0.5, {}) == 4);
  // Pole correction: the window around s = 1 holds no zero of zeta.
  SearchWindow pole;
  pole.x_min = 0.8; pole.x_max = 1.2; pole.y_min = -0.2; pole.y_max = 0.2;
  CHECK(winding_number(pole, 1.0, {}) == -1);
  CHECK(count_zeros(pole, 1.0, {}) == 0);
}

TEST_CASE("scan at delta = 1/2 reproduces the closed forms") {
  const auto zeros = scan(SearchWindow{}, 0.5, {});
  int imaginary = 0, critical = 0;
  for (const auto& z : zeros) {
    if (std::abs(z.rho.real()) < 1e-8) {
      const real_t k = (z.rho.imag() * std::log(3.0) / kPi - 1.0) / 2.0;
      CHECK(std::abs(k - std::round(k)) < 1e-8);
      ++imaginary;
    } else {
      CHECK(z.kind == ZeroKind::critical);
      ++critical;
    }
  }
  CHECK(imaginary == 4);
  CHECK(critical == 2);
  for (std::size_t i = 1; i < zeros.size(); ++i) CHECK(zeros[i - 1].rho.imag() <= zeros[i].rho.imag());
}

TEST_CASE("zero-free window") {
  SearchWindow w;
  w.x_min = 3.0; w.x_max = 4.0; w.y_min = 0.0; w.y_max = 1.0;
  CHECK(scan(w, 0.5, {}).empty());
}

TEST_CASE("scan is deterministic") {
  SearchWindow w;
  w.y_max = 12.0;
  const auto a = scan(w, 0.37, {});
  const auto b = scan(w, 0.37, {});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].rho == b[i].rho);
}

TEST_CASE("window validation") {
  SearchWindow w;
  w.x_min = 2.0; w.x_max = 1.0;
  CHECK_THROWS_AS(w.validate(), DomainError);
  CHECK_THROWS_AS((void)scan(w, 0.5, {}), DomainError);
}

}

#pragma once

#include "latzeta/arithmetic.hpp"

namespace latzeta {

/// Error-control knobs shared by every numerical module.
struct PrecisionPolicy {
  real_t target_abs_err = 1e-12;
  // Initial Euler-Maclaurin head length; the effective value is
  // max(em_direct_terms, ceil(1.3 |Im s|)).
  int em_direct_terms = 10;
  // Cap on the Bernoulli correction count before the head length is doubled.
  int em_bernoulli_terms = 30;
  real_t newton_tol = 1e-12;
  real_t pole_exclusion_radius = 1e-6;
  real_t quadrature_tol = 1e-9;

  // Below this real part the Hurwitz kernel switches from Euler-Maclaurin to
  // the Hurwitz functional equation (periodic Dirichlet series).
  real_t reflection_threshold = -4.0;

  // Zero classification thresholds.
  real_t critical_tol = 1e-6;
  real_t trivial_tol = 1e-6;

  void validate() const;
};

}  // namespace latzeta

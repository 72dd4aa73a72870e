#pragma once

#include "latzeta/arithmetic.hpp"
#include "latzeta/precision.hpp"

namespace latzeta {

/// Geometry of the alternating lattice 2Z u (2Z + 2 delta/(1+delta)).
struct LatticeParams {
  real_t delta = 1.0;           // in (0, 1]
  real_t spacing_long = 1.0;    // 2 / (1 + delta)
  real_t spacing_short = 1.0;   // 2 delta / (1 + delta)
  real_t shift = 0.5;           // z = 1 / (1 + delta)
  real_t shift_complement = 0.5;  // 1 - z = delta / (1 + delta), formed without cancellation
  real_t shift_offset = 0.0;    // z - 1/2 = (1 - delta) / (2 (1 + delta))
  real_t epsilon = 0.0;         // 1 - delta

  /// Folds delta > 1 onto 1/delta; throws DomainError for delta <= 0.
  [[nodiscard]] static LatticeParams from_delta(real_t delta);
};

/// Expansion of E(s, 1 - eps) through eps^5.
struct TaylorExpansion {
  complex_t s{};
  complex_t eps2{}, eps3{}, eps4{}, eps5{};
  complex_t zeta_s{}, zeta_s_plus_2{}, zeta_s_plus_4{};

  [[nodiscard]] complex_t evaluate(real_t epsilon) const;
};

struct EnergyEvaluation {
  complex_t value{};
  complex_t derivative{};
  real_t error_estimate = 0.0;
  real_t scale = 0.0;
};

struct DirectSumResult {
  complex_t value{};
  complex_t tail{};           // integral estimate already included in value
  real_t error_estimate = 0.0;
};

/// E(s, delta) = 2^{-s} zeta(s) + 2^{-s-1} [zeta(s, z) + zeta(s, 1 - z)], continued to s != 1.
[[nodiscard]] complex_t energy(complex_t s, real_t delta, const PrecisionPolicy& policy = {});

/// dE/ds.
[[nodiscard]] complex_t energy_ds(complex_t s, real_t delta, const PrecisionPolicy& policy = {});

/// Value, optional derivative, and the magnitude scale the value emerged from.
/// For Re s below the reflection threshold the pair of Hurwitz terms is
/// combined analytically into
///   E = 2^{2-s} Gamma(w) (2 pi)^{-w} cos(pi w / 2) sum_n cos^2(pi n z) n^{-w},  w = 1 - s,
/// which keeps full relative accuracy where the three zeta terms nearly cancel.
[[nodiscard]] EnergyEvaluation energy_evaluate(complex_t s, real_t delta,
                                               const PrecisionPolicy& policy,
                                               bool with_derivative);

/// Brute-force lattice sum for Re s > 1 over |p| <= 2 cutoff, plus a
/// midpoint-rule integral estimate of the remaining tail.
[[nodiscard]] DirectSumResult energy_direct_sum(complex_t s, real_t delta, long cutoff);

/// Closed forms at delta in {1/5, 1/3, 1/2, 1}: f_delta(s) zeta(s) / 2^{s+1}.
[[nodiscard]] complex_t energy_factorized(complex_t s, real_t delta,
                                          const PrecisionPolicy& policy = {});

/// Prefactor f_delta(s) of the factorized form (so E = f zeta(s) / 2^{s+1}).
[[nodiscard]] complex_t factorized_prefactor(complex_t s, real_t delta);

/// True when delta matches one of the factorizable values to 1e-12.
[[nodiscard]] bool is_factorizable_delta(real_t delta) noexcept;

[[nodiscard]] TaylorExpansion taylor_expansion(complex_t s, const PrecisionPolicy& policy = {});

[[nodiscard]] complex_t taylor_energy(complex_t s, real_t epsilon,
                                      const PrecisionPolicy& policy = {});

}  // namespace latzeta

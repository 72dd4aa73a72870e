#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "latzeta/arithmetic.hpp"

namespace latzeta::simd {

/// Bases of a power sum: x_i = offset + stride * i for i in [0, count).
struct Progression {
  real_t offset = 1.0;
  real_t stride = 1.0;
  std::size_t count = 0;

  [[nodiscard]] real_t at(std::size_t i) const noexcept {
    return offset + stride * static_cast<real_t>(i);
  }
};

/// sum = sum_i w_i x_i^{-s};  log_sum = sum_i w_i ln(x_i) x_i^{-s}.
struct PowerSums {
  complex_t sum{};
  complex_t log_sum{};
};

/// Which weighted power-sum implementation is active.
enum class Isa { scalar, avx2 };

[[nodiscard]] std::string_view to_string(Isa isa) noexcept;

/// True when the running CPU supports the AVX2+FMA path and it was compiled in.
[[nodiscard]] bool avx2_available() noexcept;

/// The implementation picked at startup: AVX2 when available, unless the
/// environment variable LATZETA_SIMD=scalar forces the reference kernel.
[[nodiscard]] Isa active_isa() noexcept;

/// Weighted power sum over a progression of positive bases. `weights` is
/// either empty (all ones) or holds exactly `bases.count` entries. When
/// `with_log` is false the log-weighted sum is left at zero.
/// Preconditions: every base is a finite, normal, positive double.
[[nodiscard]] PowerSums weighted_power_sum(const Progression& bases,
                                           std::span<const real_t> weights, complex_t s,
                                           bool with_log);

/// Same computation routed through an explicit implementation.
[[nodiscard]] PowerSums weighted_power_sum(Isa isa, const Progression& bases,
                                           std::span<const real_t> weights, complex_t s,
                                           bool with_log);

namespace scalar {
PowerSums weighted_power_sum(const Progression& bases, std::span<const real_t> weights,
                             complex_t s, bool with_log);
}

#if defined(LATZETA_HAVE_AVX2)
namespace avx2 {
PowerSums weighted_power_sum(const Progression& bases, std::span<const real_t> weights,
                             complex_t s, bool with_log);

// Lane-wise elementary functions, exposed for equivalence testing. Each
// processes exactly four doubles.
void log4(const real_t* x, real_t* out);
void exp4(const real_t* x, real_t* out);
void sincos4(const real_t* x, real_t* sin_out, real_t* cos_out);
}  // namespace avx2
#endif

}  // namespace latzeta::simd

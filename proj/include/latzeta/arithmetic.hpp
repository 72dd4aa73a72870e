#pragma once

#include <complex>
#include <numbers>

namespace latzeta {

// Every numeric routine in the library is written against these two aliases.
// The SIMD power-sum kernels are only compiled for the binary64 backend.
using real_t = double;
using complex_t = std::complex<real_t>;

inline constexpr real_t kPi = std::numbers::pi_v<real_t>;
inline constexpr real_t kLn2 = std::numbers::ln2_v<real_t>;
inline constexpr real_t kLn3 = 1.0986122886681098;
inline constexpr real_t kLnPi = 1.1447298858494002;
inline constexpr real_t kLn2Pi = 1.8378770664093453;

[[nodiscard]] inline complex_t pow_real_base(real_t base, complex_t s) {
  return std::exp(s * std::log(base));
}

}  // namespace latzeta

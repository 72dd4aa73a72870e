#include <cmath>

#include "latzeta/simd/power_sum.hpp"

namespace latzeta::simd::scalar {

PowerSums weighted_power_sum(const Progression& bases, std::span<const real_t> weights,
                             complex_t s, bool with_log) {
  const real_t sigma = s.real();
  const real_t t = s.imag();
  real_t sum_re = 0.0, sum_im = 0.0, log_re = 0.0, log_im = 0.0;
  for (std::size_t i = 0; i < bases.count; ++i) {
    const real_t x = bases.at(i);
    const real_t w = weights.empty() ? 1.0 : weights[i];
    const real_t lx = std::log(x);
    const real_t mag = w * std::exp(-sigma * lx);
    const real_t phase = t * lx;
    // x^{-s} = e^{-sigma ln x} (cos(t ln x) - i sin(t ln x))
    const real_t re = mag * std::cos(phase);
    const real_t im = -mag * std::sin(phase);
    sum_re += re;
    sum_im += im;
    if (with_log) {
      log_re += lx * re;
      log_im += lx * im;
    }
  }
  return {{sum_re, sum_im}, {log_re, log_im}};
}

}  // namespace latzeta::simd::scalar

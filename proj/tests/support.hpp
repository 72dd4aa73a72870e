#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "latzeta/arithmetic.hpp"

namespace testing {

using latzeta::complex_t;
using latzeta::real_t;

inline real_t rel_err(complex_t got, complex_t want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Seeded sample of the strip -10 < Re s < 10, |Im s| < 30, away from s = 1.
inline std::vector<complex_t> strip_sample(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<real_t> re(-10.0, 10.0), im(-30.0, 30.0);
  std::vector<complex_t> out;
  while (static_cast<int>(out.size()) < n) {
    const complex_t s(re(rng), im(rng));
    if (std::abs(s - 1.0) > 1e-2) out.push_back(s);
  }
  return out;
}

}  // namespace testing

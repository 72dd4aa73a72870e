#include "latzeta/simd/power_sum.hpp"

#include <cstdlib>
#include <cstring>

namespace latzeta::simd {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_available() noexcept {
#if defined(LATZETA_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported;
#else
  return false;
#endif
}

namespace {

Isa detect_isa() noexcept {
  const char* forced = std::getenv("LATZETA_SIMD");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Isa::scalar;
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() noexcept {
  static const Isa isa = detect_isa();
  return isa;
}

PowerSums weighted_power_sum(Isa isa, const Progression& bases, std::span<const real_t> weights,
                             complex_t s, bool with_log) {
#if defined(LATZETA_HAVE_AVX2)
  if (isa == Isa::avx2 && avx2_available())
    return avx2::weighted_power_sum(bases, weights, s, with_log);
#else
  (void)isa;
#endif
  return scalar::weighted_power_sum(bases, weights, s, with_log);
}

PowerSums weighted_power_sum(const Progression& bases, std::span<const real_t> weights,
                             complex_t s, bool with_log) {
  return weighted_power_sum(active_isa(), bases, weights, s, with_log);
}

}  // namespace latzeta::simd

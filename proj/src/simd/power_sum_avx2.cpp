// AVX2+FMA variant of the weighted power sum. This translation unit is the
// only one compiled with -mavx2 -mfma; it is reached through the runtime
// dispatch in power_sum.cpp. The elementary functions follow the fdlibm
// reductions and minimax polynomials, giving results within a couple of ulp
// of the libm calls used by the scalar reference.

#include <immintrin.h>

#include <array>
#include <cmath>

#include "latzeta/simd/power_sum.hpp"

namespace latzeta::simd::avx2 {
namespace {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

inline __m256d log_pd(__m256d x) {
  constexpr double ln2_hi = 6.93147180369123816490e-01;
  constexpr double ln2_lo = 1.90821492927058770002e-10;
  constexpr double lg1 = 6.666666666666735130e-01;
  constexpr double lg2 = 3.999999999940941908e-01;
  constexpr double lg3 = 2.857142874366239149e-01;
  constexpr double lg4 = 2.222219843214978396e-01;
  constexpr double lg5 = 1.818357216161805012e-01;
  constexpr double lg6 = 1.531383769920937332e-01;
  constexpr double lg7 = 1.479819860511658591e-01;

  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i biased =
      _mm256_srli_epi64(_mm256_and_si256(bits, _mm256_set1_epi64x(0x7ff0000000000000LL)), 52);
  __m256d m = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000fffffffffffffLL)),
                      _mm256_set1_epi64x(0x3ff0000000000000LL)));
  const __m256d two52 = splat(4503599627370496.0);
  __m256d k = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(two52))), two52);
  k = _mm256_sub_pd(k, splat(1023.0));

  // Fold the mantissa into [sqrt(2)/2, sqrt(2)).
  const __m256d big = _mm256_cmp_pd(m, splat(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), big);
  k = _mm256_add_pd(k, _mm256_and_pd(big, splat(1.0)));

  const __m256d f = _mm256_sub_pd(m, splat(1.0));
  const __m256d hfsq = _mm256_mul_pd(_mm256_mul_pd(splat(0.5), f), f);
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(splat(2.0), f));
  const __m256d z = _mm256_mul_pd(s, s);
  __m256d r = splat(lg7);
  r = _mm256_fmadd_pd(r, z, splat(lg6));
  r = _mm256_fmadd_pd(r, z, splat(lg5));
  r = _mm256_fmadd_pd(r, z, splat(lg4));
  r = _mm256_fmadd_pd(r, z, splat(lg3));
  r = _mm256_fmadd_pd(r, z, splat(lg2));
  r = _mm256_fmadd_pd(r, z, splat(lg1));
  r = _mm256_mul_pd(r, z);

  // k ln2_hi - ((hfsq - (s (hfsq + R) + k ln2_lo)) - f)
  const __m256d inner =
      _mm256_fmadd_pd(s, _mm256_add_pd(hfsq, r), _mm256_mul_pd(k, splat(ln2_lo)));
  const __m256d tail = _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f);
  return _mm256_fmsub_pd(k, splat(ln2_hi), tail);
}

inline __m256d pow2_int(__m128i k) {
  const __m256i wide = _mm256_cvtepi32_epi64(k);
  return _mm256_castsi256_pd(
      _mm256_slli_epi64(_mm256_add_epi64(wide, _mm256_set1_epi64x(1023)), 52));
}

inline __m256d exp_pd(__m256d x) {
  constexpr double ln2_hi = 6.93147180369123816490e-01;
  constexpr double ln2_lo = 1.90821492927058770002e-10;
  constexpr double inv_ln2 = 1.44269504088896338700e+00;

  x = _mm256_max_pd(x, splat(-745.2));
  x = _mm256_min_pd(x, splat(709.78));
  const __m256d kd =
      _mm256_round_pd(_mm256_mul_pd(x, splat(inv_ln2)), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(kd, splat(ln2_hi), x);
  r = _mm256_fnmadd_pd(kd, splat(ln2_lo), r);

  // Taylor polynomial through r^13 on |r| <= ln2/2.
  static constexpr std::array<double, 14> inv_fact = {
      1.0,
      1.0,
      1.0 / 2.0,
      1.0 / 6.0,
      1.0 / 24.0,
      1.0 / 120.0,
      1.0 / 720.0,
      1.0 / 5040.0,
      1.0 / 40320.0,
      1.0 / 362880.0,
      1.0 / 3628800.0,
      1.0 / 39916800.0,
      1.0 / 479001600.0,
      1.0 / 6227020800.0,
  };
  __m256d p = splat(inv_fact[13]);
  for (int i = 12; i >= 0; --i) p = _mm256_fmadd_pd(p, r, splat(inv_fact[static_cast<std::size_t>(i)]));

  // Scale by 2^k in two halves so that extreme k stays representable.
  const __m128i k = _mm256_cvtpd_epi32(kd);
  const __m128i k1 = _mm_srai_epi32(k, 1);
  const __m128i k2 = _mm_sub_epi32(k, k1);
  return _mm256_mul_pd(_mm256_mul_pd(p, pow2_int(k1)), pow2_int(k2));
}

inline void sincos_pd(__m256d x, __m256d& sin_out, __m256d& cos_out) {
  constexpr double inv_pio2 = 6.36619772367581382433e-01;
  constexpr double pio2_1 = 1.57079632673412561417e+00;
  constexpr double pio2_2 = 6.07710050630396597660e-11;
  constexpr double pio2_2t = 2.02226624879595063154e-21;

  constexpr double s1 = -1.66666666666666324348e-01;
  constexpr double s2 = 8.33333333332248946124e-03;
  constexpr double s3 = -1.98412698298579493134e-04;
  constexpr double s4 = 2.75573137070700676789e-06;
  constexpr double s5 = -2.50507602534068634195e-08;
  constexpr double s6 = 1.58969099521155010221e-10;

  constexpr double c1 = 4.16666666666666019037e-02;
  constexpr double c2 = -1.38888888888741095749e-03;
  constexpr double c3 = 2.48015872894767294178e-05;
  constexpr double c4 = -2.75573143513906633035e-07;
  constexpr double c5 = 2.08757232129817482790e-09;
  constexpr double c6 = -1.13596475577881948265e-11;

  const __m256d j =
      _mm256_round_pd(_mm256_mul_pd(x, splat(inv_pio2)), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(j, splat(pio2_1), x);
  r = _mm256_fnmadd_pd(j, splat(pio2_2), r);
  r = _mm256_fnmadd_pd(j, splat(pio2_2t), r);

  const __m256d z = _mm256_mul_pd(r, r);

  __m256d ps = splat(s6);
  ps = _mm256_fmadd_pd(ps, z, splat(s5));
  ps = _mm256_fmadd_pd(ps, z, splat(s4));
  ps = _mm256_fmadd_pd(ps, z, splat(s3));
  ps = _mm256_fmadd_pd(ps, z, splat(s2));
  ps = _mm256_fmadd_pd(ps, z, splat(s1));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(z, r), ps, r);

  __m256d pc = splat(c6);
  pc = _mm256_fmadd_pd(pc, z, splat(c5));
  pc = _mm256_fmadd_pd(pc, z, splat(c4));
  pc = _mm256_fmadd_pd(pc, z, splat(c3));
  pc = _mm256_fmadd_pd(pc, z, splat(c2));
  pc = _mm256_fmadd_pd(pc, z, splat(c1));
  pc = _mm256_mul_pd(pc, z);
  const __m256d hz = _mm256_mul_pd(splat(0.5), z);
  const __m256d w = _mm256_sub_pd(splat(1.0), hz);
  const __m256d corr =
      _mm256_fmadd_pd(z, pc, _mm256_sub_pd(_mm256_sub_pd(splat(1.0), w), hz));
  const __m256d cos_r = _mm256_add_pd(w, corr);

  const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(j));
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
  const __m256d sin_neg = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, two), two));
  const __m256d cos_neg = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(_mm256_add_epi64(q, one), two), two));
  const __m256d sign_bit = splat(-0.0);

  const __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
  const __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
  sin_out = _mm256_xor_pd(s, _mm256_and_pd(sin_neg, sign_bit));
  cos_out = _mm256_xor_pd(c, _mm256_and_pd(cos_neg, sign_bit));
}

inline double hsum(__m256d v) {
  alignas(32) std::array<double, 4> lanes{};
  _mm256_store_pd(lanes.data(), v);
  return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

}  // namespace

void log4(const real_t* x, real_t* out) { _mm256_storeu_pd(out, log_pd(_mm256_loadu_pd(x))); }

void exp4(const real_t* x, real_t* out) { _mm256_storeu_pd(out, exp_pd(_mm256_loadu_pd(x))); }

void sincos4(const real_t* x, real_t* sin_out, real_t* cos_out) {
  __m256d s, c;
  sincos_pd(_mm256_loadu_pd(x), s, c);
  _mm256_storeu_pd(sin_out, s);
  _mm256_storeu_pd(cos_out, c);
}

PowerSums weighted_power_sum(const Progression& bases, std::span<const real_t> weights,
                             complex_t s, bool with_log) {
  const real_t sigma = s.real();
  const real_t t = s.imag();

  // The Cody-Waite reduction in sincos_pd is exact only for moderate phases.
  const real_t last = bases.count == 0 ? 1.0 : bases.at(bases.count - 1);
  const real_t max_phase = std::abs(t) * std::max(std::abs(std::log(bases.offset)),
                                                  std::abs(std::log(last)));
  if (max_phase > 1e5) return scalar::weighted_power_sum(bases, weights, s, with_log);

  const __m256d offset = splat(bases.offset);
  const __m256d stride = splat(bases.stride);
  const __m256d neg_sigma = splat(-sigma);
  const __m256d tv = splat(t);
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d four = splat(4.0);

  __m256d acc_re = _mm256_setzero_pd(), acc_im = _mm256_setzero_pd();
  __m256d log_re = _mm256_setzero_pd(), log_im = _mm256_setzero_pd();

  const std::size_t vec_end = bases.count - bases.count % 4;
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d x = _mm256_add_pd(offset, _mm256_mul_pd(stride, idx));
    idx = _mm256_add_pd(idx, four);
    const __m256d lx = log_pd(x);
    __m256d mag = exp_pd(_mm256_mul_pd(neg_sigma, lx));
    if (!weights.empty()) mag = _mm256_mul_pd(mag, _mm256_loadu_pd(weights.data() + i));
    __m256d sn, cs;
    sincos_pd(_mm256_mul_pd(tv, lx), sn, cs);
    const __m256d re = _mm256_mul_pd(mag, cs);
    const __m256d im = _mm256_xor_pd(_mm256_mul_pd(mag, sn), splat(-0.0));
    acc_re = _mm256_add_pd(acc_re, re);
    acc_im = _mm256_add_pd(acc_im, im);
    if (with_log) {
      log_re = _mm256_fmadd_pd(lx, re, log_re);
      log_im = _mm256_fmadd_pd(lx, im, log_im);
    }
  }

  PowerSums out{{hsum(acc_re), hsum(acc_im)}, {hsum(log_re), hsum(log_im)}};
  for (std::size_t i = vec_end; i < bases.count; ++i) {
    const real_t lx = std::log(bases.at(i));
    const real_t mag = (weights.empty() ? 1.0 : weights[i]) * std::exp(-sigma * lx);
    const complex_t term{mag * std::cos(t * lx), -mag * std::sin(t * lx)};
    out.sum += term;
    if (with_log) out.log_sum += lx * term;
  }
  return out;
}

}  // namespace latzeta::simd::avx2

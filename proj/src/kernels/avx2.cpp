#include "mincm/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#define MINCM_TARGET_AVX2 __attribute__((target("avx2")))

namespace mincm::kernels::detail {

MINCM_TARGET_AVX2
void xor_row_avx2(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(a, b));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

// Four lanes in double precision. With p < 2^25 every intermediate
// (d + c*s < 2^51, q*p < 2^51) is an exact double; the floored quotient is
// off by at most one and the remainder is corrected once in each direction.
MINCM_TARGET_AVX2
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t coef, std::uint32_t p, std::size_t n) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(coef));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_cvtepi32_pd(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256d s = _mm256_cvtepi32_pd(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
    __m256d x = _mm256_add_pd(d, _mm256_mul_pd(vc, s));
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vinv));
    __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, vp));
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i),
                     _mm256_cvttpd_epi32(r));
  }
  const std::uint64_t c = coef;
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + c * src[i]) % p);
}

}  // namespace mincm::kernels::detail

#endif

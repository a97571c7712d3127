#include "mincm/kernels.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)

#include <arm_neon.h>

namespace mincm::kernels::detail {

void xor_row_neon(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2)
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] ^= src[i];
}

// Same exactness argument as the AVX2 variant: p < 2^25.
void axpy_mod_neon(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t coef, std::uint32_t p, std::size_t n) {
  const float64x2_t vp = vdupq_n_f64(static_cast<double>(p));
  const float64x2_t vinv = vdupq_n_f64(1.0 / static_cast<double>(p));
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t x = vmlal_n_u32(vmovl_u32(vld1_u32(dst + i)), vld1_u32(src + i),
                               coef);
    float64x2_t xf = vcvtq_f64_u64(x);
    float64x2_t q = vrndmq_f64(vmulq_f64(xf, vinv));
    float64x2_t r = vsubq_f64(xf, vmulq_f64(q, vp));
    r = vbslq_f64(vcltq_f64(r, zero), vaddq_f64(r, vp), r);
    r = vbslq_f64(vcgeq_f64(r, vp), vsubq_f64(r, vp), r);
    vst1_u32(dst + i, vmovn_u64(vcvtq_u64_f64(r)));
  }
  const std::uint64_t c = coef;
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + c * src[i]) % p);
}

}  // namespace mincm::kernels::detail

#endif

#include "mincm/kernels.hpp"

namespace mincm::kernels::detail {

void xor_row_scalar(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src,
                     std::uint32_t coef, std::uint32_t p, std::size_t n) {
  const std::uint64_t c = coef;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + c * src[i]) % p);
}

}  // namespace mincm::kernels::detail

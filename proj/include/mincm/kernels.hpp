#pragma once

// Row kernels for dense exact elimination. Every entry point has a scalar
// reference implementation; vector variants are selected at runtime from the
// host CPU and must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>

namespace mincm::kernels {

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa);

/// dst[i] ^= src[i]. GF(2) row addition on packed bits.
using XorRowFn = void (*)(std::uint64_t* dst, const std::uint64_t* src,
                          std::size_t words);
/// dst[i] = (dst[i] + coef * src[i]) mod p, all operands reduced mod p.
using AxpyModFn = void (*)(std::uint32_t* dst, const std::uint32_t* src,
                           std::uint32_t coef, std::uint32_t p, std::size_t n);

struct KernelTable {
  Isa isa;
  XorRowFn xor_row;
  AxpyModFn axpy_mod;
  /// Largest modulus the axpy kernel handles exactly.
  std::uint32_t axpy_max_modulus;
};

const KernelTable& scalar_table();
/// Null when the variant is not compiled in or the CPU lacks it.
const KernelTable* avx2_table();
const KernelTable* neon_table();

/// Best table for this host, unless overridden by `force` or by the
/// MINCM_KERNELS environment variable ("scalar", "avx2", "neon").
const KernelTable& active();
/// Pins the active table; returns false when `isa` is unavailable.
bool force(Isa isa);
void reset();

void xor_row(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t coef, std::uint32_t p);

namespace detail {
void xor_row_scalar(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t words);
void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src,
                     std::uint32_t coef, std::uint32_t p, std::size_t n);
#if defined(__x86_64__) || defined(__i386__)
void xor_row_avx2(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t words);
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t coef, std::uint32_t p, std::size_t n);
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
void xor_row_neon(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t words);
void axpy_mod_neon(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t coef, std::uint32_t p, std::size_t n);
#endif
}  // namespace detail

}  // namespace mincm::kernels

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "mincm/kernels.hpp"

namespace mincm::kernels {

namespace {

constexpr std::uint32_t kVectorModulusLimit = std::uint32_t{1} << 25;

const KernelTable kScalar{Isa::Scalar, detail::xor_row_scalar,
                          detail::axpy_mod_scalar, 0x7fffffffU};

#if defined(__x86_64__) || defined(__i386__)
const KernelTable kAvx2{Isa::Avx2, detail::xor_row_avx2, detail::axpy_mod_avx2,
                        kVectorModulusLimit - 1};
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
const KernelTable kNeon{Isa::Neon, detail::xor_row_neon, detail::axpy_mod_neon,
                        kVectorModulusLimit - 1};
#endif

std::atomic<const KernelTable*> g_forced{nullptr};

const KernelTable& detect() {
  if (const char* env = std::getenv("MINCM_KERNELS")) {
    std::string_view want(env);
    if (want == "scalar") return kScalar;
    if (want == "avx2" && avx2_table()) return *avx2_table();
    if (want == "neon" && neon_table()) return *neon_table();
  }
  if (const KernelTable* t = avx2_table()) return *t;
  if (const KernelTable* t = neon_table()) return *t;
  return kScalar;
}

}  // namespace

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_table() {
#if defined(__ARM_NEON) || defined(__aarch64__)
  return &kNeon;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  if (const KernelTable* t = g_forced.load(std::memory_order_acquire))
    return *t;
  static const KernelTable& detected = detect();
  return detected;
}

bool force(Isa isa) {
  const KernelTable* t = nullptr;
  switch (isa) {
    case Isa::Scalar: t = &kScalar; break;
    case Isa::Avx2: t = avx2_table(); break;
    case Isa::Neon: t = neon_table(); break;
  }
  if (!t) return false;
  g_forced.store(t, std::memory_order_release);
  return true;
}

void reset() { g_forced.store(nullptr, std::memory_order_release); }

void xor_row(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  active().xor_row(dst.data(), src.data(), dst.size());
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t coef, std::uint32_t p) {
  const KernelTable& t = active();
  if (p <= t.axpy_max_modulus)
    t.axpy_mod(dst.data(), src.data(), coef, p, dst.size());
  else
    detail::axpy_mod_scalar(dst.data(), src.data(), coef, p, dst.size());
}

}  // namespace mincm::kernels

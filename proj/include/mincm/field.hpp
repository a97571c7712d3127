#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mincm {

/// Coefficient field: GF(p) for a prime p < 2^31, or the rationals.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws MalformedInput unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q", "Q", "qq", or "gf<p>" (case-insensitive).
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace mincm

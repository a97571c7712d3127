#include "mincm/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "mincm/error.hpp"

namespace mincm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorKind::MalformedInput,
                std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (t == "q" || t == "qq" || t == "rationals") return rationals();
  if (t.size() > 2 && t.compare(0, 2, "gf") == 0) {
    std::uint64_t p = 0;
    const char* first = t.data() + 2;
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last) return prime(p);
  }
  throw Error(ErrorKind::MalformedInput,
              "unknown field '" + std::string(text) + "' (use q or gf<p>)");
}

std::string FieldSpec::name() const {
  return is_rational() ? "q" : "gf" + std::to_string(p_);
}

}  // namespace mincm

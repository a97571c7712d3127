#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace mincm {

using Vertex = int;

/// Upper bound on the vertex universe; faces are stored as 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A face: a set of vertex ids stored as a bitmask. Iteration and
/// `vertices()` always yield ids in ascending order.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
  Face(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  static Face from_vertices(const std::vector<Vertex>& vs) {
    Face f;
    for (Vertex v : vs) f.insert(v);
    return f;
  }
  /// The full simplex on vertices 0..n-1.
  static constexpr Face range(int n) {
    return Face(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int dim() const { return size() - 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool is_subset_of(Face other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Face other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Largest vertex id + 1, or 0 for the empty face.
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }
  constexpr bool operator==(const Face&) const = default;

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  template <class Fn>
  void for_each_vertex(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  /// Calls fn on every subset of this face, the empty face included.
  template <class Fn>
  void for_each_subset(Fn&& fn) const {
    std::uint64_t s = 0;
    do {
      fn(Face(s));
      s = (s - bits_) & bits_;
    } while (s != 0);
  }

  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending vertex lists (a proper prefix sorts
/// first). This is the canonical facet order everywhere.
constexpr bool lex_less(Face a, Face b) {
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  std::uint64_t low = diff & (~diff + 1);
  // Elements above the first difference decide whether the other list ended.
  std::uint64_t above = ~(low | (low - 1));
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct LexLess {
  constexpr bool operator()(Face a, Face b) const { return lex_less(a, b); }
};

}  // namespace mincm

template <>
struct std::hash<mincm::Face> {
  std::size_t operator()(mincm::Face f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits());
  }
};

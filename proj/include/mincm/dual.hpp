#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mincm/complex.hpp"
#include "mincm/field.hpp"

namespace mincm {

/// Squarefree monomial ideal in k[x_0..x_{n-1}], stored by generator
/// supports: a minimal (antichain) generating set in canonical order.
struct SquarefreeIdeal {
  int n = 0;
  std::vector<Face> generators;

  /// Minimalizes and sorts the given supports.
  static SquarefreeIdeal from_generators(int n, std::vector<Face> supports);

  bool is_zero() const { return generators.empty(); }
  /// Contains the monomial 1.
  bool is_unit() const {
    return generators.size() == 1 && generators.front().empty();
  }
  /// Degree shared by every generator, if any.
  std::optional<int> common_degree() const;
  bool contains_monomial(Face support) const;
};

/// Generators are the complements [n] - F of the facets. Throws OutOfRange
/// for n below the vertex universe and DegenerateIdeal for the void complex.
SquarefreeIdeal dual_ideal(const SimplicialComplex& c, int n);

/// (I : m) for the squarefree monomial with support `m`.
SquarefreeIdeal colon(const SquarefreeIdeal& ideal, Face m);

/// Graded Betti numbers beta_{i,j} of the ideal (i = 0 counts generators).
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;

  std::int64_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  bool operator==(const BettiTable&) const = default;
};

/// Upper bound on n for the subset sums in betti_table.
inline constexpr int kMaxBettiVariables = 20;

/// Hochster's formula: beta_{i,j}(I) = sum over |W| = j of
/// dim H~_{j-i-2}(Sigma_W), Sigma the complex whose non-faces are I.
/// Throws DegenerateIdeal for the zero or unit ideal.
BettiTable betti_table(const SquarefreeIdeal& ideal, const FieldSpec& field,
                       unsigned jobs = 0);

/// Generated in one degree c and beta_{i,j} = 0 for j != i + c. Mixed degrees
/// give false. Throws DegenerateIdeal for the zero or unit ideal.
bool has_linear_resolution(const SquarefreeIdeal& ideal, const FieldSpec& field,
                           unsigned jobs = 0);

/// An order m_1..m_e of the generators with every (m_1..m_{j-1}) : m_j
/// generated by variables, found by backtracking in canonical order.
std::optional<std::vector<Face>> linear_quotients_order(
    const SquarefreeIdeal& ideal);

/// With f the monomial on [n] - F, whether (I : f) is generated in degree 1.
/// The zero ideal counts as degree one (adding a first facet).
bool colon_is_degree_one(const SquarefreeIdeal& ideal, Face facet, int n);

}  // namespace mincm

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mincm/field.hpp"

namespace mincm {

/// Column-major sparse matrix with small integer entries (boundary matrices
/// only ever hold +1 and -1). Each column is sorted by row.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> columns;

  std::size_t nonzeros() const;
  double density() const;
  /// Entry lookup; zero when absent.
  int at(int row, int col) const;
};

/// Product a * b over the integers, as a sparse matrix.
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

enum class EliminationRoute {
  Auto,    ///< dense when density exceeds kDenseThreshold
  Sparse,  ///< column reduction on sparse columns
  Dense,   ///< row elimination on dense rows (vector kernels over GF(p))
};

inline constexpr double kDenseThreshold = 0.25;

/// Exact rank over the field. Over GF(p) entries are reduced mod p; over the
/// rationals the elimination is fraction-free.
std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field,
                 EliminationRoute route = EliminationRoute::Auto);

/// A nonzero x with m x = 0 over the field, or nullopt when m has full column
/// rank. Rational kernels are returned as primitive integer vectors; GF(p)
/// kernels as residues in [0, p).
std::optional<std::vector<mpz_class>> kernel_vector(const SparseIntMatrix& m,
                                                    const FieldSpec& field);

/// Residue inverse modulo a prime.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace mincm

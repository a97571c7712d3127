#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "mincm/complex.hpp"
#include "mincm/field.hpp"
#include "mincm/linalg.hpp"

namespace mincm {

/// Boundary map from `degree`-faces (columns) to (degree-1)-faces (rows).
/// Degree 0 is the augmentation onto the empty face. Rows and columns follow
/// canonical face order; the sign of removing the j-th smallest vertex is
/// (-1)^j. Entries are integers, valid in every field.
struct BoundaryMatrix {
  int degree = 0;
  std::vector<Face> row_faces;
  std::vector<Face> col_faces;
  SparseIntMatrix matrix;
};

/// Degrees 0..dim; empty for the void complex.
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c);
/// Same, from explicit face buckets (bucket k holds faces of size k).
std::vector<BoundaryMatrix> boundary_matrices(
    const std::vector<std::vector<Face>>& faces_by_size);

/// dim H~_i for i = -1..dim; all entries zero (and none stored) for void.
struct BettiVector {
  std::vector<std::int64_t> dims;

  std::int64_t operator[](int i) const {
    int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
    return dims[static_cast<std::size_t>(idx)];
  }
  bool is_zero() const;
  /// sum_i (-1)^i dim H~_i
  std::int64_t euler_characteristic() const;
  bool operator==(const BettiVector&) const = default;
};

BettiVector reduced_homology(const SimplicialComplex& c, const FieldSpec& field,
                             EliminationRoute route = EliminationRoute::Auto);
BettiVector reduced_homology(const std::vector<std::vector<Face>>& faces_by_size,
                             const FieldSpec& field,
                             EliminationRoute route = EliminationRoute::Auto);

bool is_acyclic(const SimplicialComplex& c, const FieldSpec& field);

/// Every face with fewer than `l` vertices (the empty face included) has an
/// acyclic link. Requires l >= 1.
bool is_l_fold_acyclic(const SimplicialComplex& c, const FieldSpec& field,
                       int l);

/// A top-dimensional cycle: coefficients on facets of dimension `degree`.
struct Cycle {
  int degree = 0;
  FieldSpec field = FieldSpec::rationals();
  std::vector<Face> support;
  std::vector<mpz_class> coefficients;
};

/// A nonzero element of ker(boundary) in the top degree, or nullopt when
/// H~_{d-1} vanishes.
std::optional<Cycle> top_cycle(const SimplicialComplex& c,
                               const FieldSpec& field);

/// Whether the chain has zero boundary over its field.
bool is_cycle(const Cycle& cycle);

}  // namespace mincm

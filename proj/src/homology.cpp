#include "mincm/homology.hpp"

#include <unordered_map>

#include "mincm/error.hpp"

namespace mincm {

std::vector<BoundaryMatrix> boundary_matrices(
    const std::vector<std::vector<Face>>& faces_by_size) {
  std::vector<BoundaryMatrix> out;
  for (std::size_t k = 1; k < faces_by_size.size(); ++k) {
    BoundaryMatrix b;
    b.degree = static_cast<int>(k) - 1;
    b.row_faces = faces_by_size[k - 1];
    b.col_faces = faces_by_size[k];
    std::unordered_map<Face, int> row_index;
    for (std::size_t r = 0; r < b.row_faces.size(); ++r)
      row_index.emplace(b.row_faces[r], static_cast<int>(r));
    b.matrix.rows = static_cast<int>(b.row_faces.size());
    b.matrix.cols = static_cast<int>(b.col_faces.size());
    b.matrix.columns.resize(b.col_faces.size());
    for (std::size_t j = 0; j < b.col_faces.size(); ++j) {
      Face sigma = b.col_faces[j];
      auto& col = b.matrix.columns[j];
      int position = 0;
      sigma.for_each_vertex([&](Vertex v) {
        Face facet = sigma;
        facet.erase(v);
        col.emplace_back(row_index.at(facet), position % 2 == 0 ? 1 : -1);
        ++position;
      });
      std::sort(col.begin(), col.end());
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c) {
  return boundary_matrices(c.faces_by_dim());
}

bool BettiVector::is_zero() const {
  for (auto d : dims)
    if (d != 0) return false;
  return true;
}

std::int64_t BettiVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t idx = 0; idx < dims.size(); ++idx)
    chi += (idx % 2 == 1) ? dims[idx] : -dims[idx];
  return chi;
}

BettiVector reduced_homology(const std::vector<std::vector<Face>>& faces_by_size,
                             const FieldSpec& field, EliminationRoute route) {
  BettiVector betti;
  if (faces_by_size.empty()) return betti;
  auto mats = boundary_matrices(faces_by_size);
  // ranks[k] = rank of the map out of size-k faces; size-0 maps to zero.
  std::vector<std::int64_t> ranks(faces_by_size.size() + 1, 0);
  for (const auto& b : mats)
    ranks[static_cast<std::size_t>(b.degree) + 1] =
        static_cast<std::int64_t>(rank(b.matrix, field, route));
  betti.dims.resize(faces_by_size.size());
  for (std::size_t k = 0; k < faces_by_size.size(); ++k)
    betti.dims[k] = static_cast<std::int64_t>(faces_by_size[k].size()) -
                    ranks[k] - ranks[k + 1];
  return betti;
}

BettiVector reduced_homology(const SimplicialComplex& c, const FieldSpec& field,
                             EliminationRoute route) {
  return reduced_homology(c.faces_by_dim(), field, route);
}

bool is_acyclic(const SimplicialComplex& c, const FieldSpec& field) {
  return reduced_homology(c, field).is_zero();
}

bool is_l_fold_acyclic(const SimplicialComplex& c, const FieldSpec& field,
                       int l) {
  if (l < 1)
    throw Error(ErrorKind::OutOfRange, "l-fold acyclicity needs l >= 1");
  for (const auto& bucket : c.faces_by_dim()) {
    for (Face sigma : bucket) {
      if (sigma.size() >= l) return true;
      if (!is_acyclic(link(c, sigma), field)) return false;
    }
  }
  return true;
}

std::optional<Cycle> top_cycle(const SimplicialComplex& c,
                               const FieldSpec& field) {
  if (c.is_void()) return std::nullopt;
  auto buckets = c.faces_by_dim();
  auto mats = boundary_matrices(buckets);
  const BoundaryMatrix& top = mats.back();
  auto kernel = kernel_vector(top.matrix, field);
  if (!kernel) return std::nullopt;
  Cycle cycle;
  cycle.degree = top.degree;
  cycle.field = field;
  for (std::size_t j = 0; j < kernel->size(); ++j)
    if ((*kernel)[j] != 0) {
      cycle.support.push_back(top.col_faces[j]);
      cycle.coefficients.push_back((*kernel)[j]);
    }
  return cycle;
}

bool is_cycle(const Cycle& cycle) {
  std::unordered_map<Face, mpz_class> boundary;
  for (std::size_t j = 0; j < cycle.support.size(); ++j) {
    int position = 0;
    cycle.support[j].for_each_vertex([&](Vertex v) {
      Face facet = cycle.support[j];
      facet.erase(v);
      if (position % 2 == 0)
        boundary[facet] += cycle.coefficients[j];
      else
        boundary[facet] -= cycle.coefficients[j];
      ++position;
    });
  }
  const std::uint32_t p = cycle.field.characteristic();
  for (auto& [face, value] : boundary) {
    if (p != 0) value %= p;
    if (value != 0) return false;
  }
  return true;
}

}  // namespace mincm

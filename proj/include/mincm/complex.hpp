#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mincm/face.hpp"

namespace mincm {

/// Sorted, deduplicated labels: numeric order when every label is a
/// non-negative integer, string order otherwise.
std::vector<std::string> natural_label_order(std::vector<std::string> labels);

/// Face counts f_{-1}, f_0, ..., f_{dim}. Empty for the void complex.
struct FVector {
  std::vector<std::int64_t> entries;

  /// f_i; zero outside the stored range.
  std::int64_t operator[](int i) const {
    int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(entries.size())) return 0;
    return entries[static_cast<std::size_t>(idx)];
  }
  int top_dim() const { return static_cast<int>(entries.size()) - 2; }
  bool operator==(const FVector&) const = default;
};

/// h_0, ..., h_d.
struct HVector {
  std::vector<std::int64_t> entries;
  bool operator==(const HVector&) const = default;
};

/// h-vector of a (d-1)-dimensional complex from its f-vector, via
/// h_i = sum_k binom(d-k, i-k) (-1)^(i-k) f_{k-1}.
HVector h_vector_from_f(const FVector& f, int d);

/// Reduced Euler characteristic, sum_i (-1)^i f_i over i >= -1.
std::int64_t reduced_euler_characteristic(const FVector& f);

/// Finite simplicial complex over the vertex universe {0, ..., n-1}, stored
/// by its facets in canonical (lexicographic) order. Immutable.
///
/// The universe may contain vertices that lie in no face (after a facet
/// removal, or for links); such vertices never affect homology or depth.
/// Void (no faces) and irrelevant ({∅}) are distinct values.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Canonicalizes an arbitrary generating set: keeps only inclusion-maximal
  /// faces and sorts them. `absorbed` receives the number of dropped inputs
  /// (duplicates included).
  static SimplicialComplex from_faces(int n, std::vector<Face> generators,
                                      std::vector<std::string> labels = {},
                                      std::size_t* absorbed = nullptr);

  /// Builds a complex from label sets. Vertex ids are assigned in natural
  /// label order (numeric when every label is a non-negative integer).
  /// Throws MalformedInput on a repeated label inside one facet.
  static SimplicialComplex from_facets(
      const std::vector<std::vector<std::string>>& facet_labels,
      std::size_t* absorbed = nullptr);
  static SimplicialComplex from_facets(
      const std::vector<std::vector<int>>& facet_labels,
      std::size_t* absorbed = nullptr);

  /// As from_facets, over an explicit label universe that must contain every
  /// facet label; extra labels become vertices in no face.
  static SimplicialComplex from_facets_over(
      std::vector<std::string> universe,
      const std::vector<std::vector<std::string>>& facet_labels,
      std::size_t* absorbed = nullptr);

  static SimplicialComplex void_complex(int n = 0);
  static SimplicialComplex irrelevant(int n = 0);
  static SimplicialComplex simplex(int n);
  static SimplicialComplex boundary_of_simplex(int n);

  int num_vertices() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }
  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const {
    return facets_.size() == 1 && facets_.front().empty();
  }
  /// Maximum facet cardinality (0 for void and irrelevant).
  int d() const { return d_; }
  int dim() const { return d_ - 1; }

  /// Vertex label; the decimal id when the complex carries no labels.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find_vertex(const std::string& label) const;
  /// Translates a label set into a face. Throws MalformedInput.
  Face face_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Face f) const;

  /// Union of all facets.
  Face support() const;
  bool contains(Face f) const;
  bool is_facet(Face f) const;
  std::optional<std::size_t> facet_index(Face f) const;

  /// All faces, bucketed by dimension + 1, each bucket in canonical order.
  std::vector<std::vector<Face>> faces_by_dim() const;

  bool operator==(const SimplicialComplex& other) const;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Face> facets_;
  std::vector<std::string> labels_;
};

FVector f_vector(const SimplicialComplex& c);
/// Throws OutOfRange for the void complex.
HVector h_vector(const SimplicialComplex& c);
std::int64_t reduced_euler_characteristic(const SimplicialComplex& c);

/// lk(sigma) over the same vertex universe. Throws FaceNotInComplex.
SimplicialComplex link(const SimplicialComplex& c, Face sigma);
/// Re-indexes onto the vertices actually used, keeping labels.
SimplicialComplex compact(const SimplicialComplex& c);
/// Throws NotAFacet.
SimplicialComplex remove_facet(const SimplicialComplex& c, Face facet);
/// Adds a generating face (no-op if already a face).
SimplicialComplex add_facet(const SimplicialComplex& c, Face facet);
/// Subcomplex generated by the facets selected in `keep` (bit i = facet i).
SimplicialComplex facet_subcomplex(const SimplicialComplex& c,
                                   const std::vector<bool>& keep);
/// Faces of dimension <= i. Throws OutOfRange unless -1 <= i <= dim.
SimplicialComplex skeleton(const SimplicialComplex& c, int i);
/// Faces contained in `w`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, Face w);
/// Join; the second complex's vertices are relabeled above the first's.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// Minimal non-faces inside the universe [n].
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c, int n);
/// Alexander dual with respect to [n]. Throws OutOfRange when n is smaller
/// than the vertex universe.
SimplicialComplex alexander_dual(const SimplicialComplex& c, int n);
SimplicialComplex alexander_dual(const SimplicialComplex& c);

/// Every (d-2)-face with the number of facets containing it.
std::map<Face, int, LexLess> ridge_incidence(const SimplicialComplex& c);
/// Ridges lying in exactly one facet, in canonical order.
std::vector<Face> boundary_ridges(const SimplicialComplex& c);
/// The subcomplex generated by boundary ridges. Throws NotPure.
SimplicialComplex boundary_complex(const SimplicialComplex& c);
/// Number of boundary ridges inside each facet, indexed like facets().
std::vector<int> ridges_per_facet(const SimplicialComplex& c);
bool has_no_boundary_ridges(const SimplicialComplex& c);

bool is_pure(const SimplicialComplex& c);

/// Facets as nodes, an edge whenever two facets share a ridge.
struct DualGraph {
  std::vector<std::vector<std::size_t>> adjacency;
  bool is_connected() const;
};
DualGraph dual_graph(const SimplicialComplex& c);
bool is_pseudomanifold(const SimplicialComplex& c);

/// Union of two complexes, identifying vertices with equal labels.
SimplicialComplex glue(const SimplicialComplex& a, const SimplicialComplex& b);
/// Faces common to both, vertices identified by label.
SimplicialComplex intersect(const SimplicialComplex& a,
                            const SimplicialComplex& b);

/// Facets as label lists in canonical order.
std::vector<std::vector<std::string>> labeled_facets(const SimplicialComplex& c);

}  // namespace mincm

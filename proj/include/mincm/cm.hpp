#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mincm/complex.hpp"
#include "mincm/field.hpp"
#include "mincm/homology.hpp"

namespace mincm {

/// A face whose link has nonzero reduced homology in `degree`; it caps the
/// depth at degree + 1 + |face|.
struct DepthWitness {
  Face face;
  int degree = 0;
  int bound() const { return degree + 1 + face.size(); }
};

struct CMReport {
  FieldSpec field = FieldSpec::rationals();
  int depth = 0;
  bool is_cm = false;
  /// Present iff depth < d.
  std::optional<DepthWitness> witness;
};

/// Depth of the Stanley-Reisner ring: the least bound over all faces T and
/// degrees j with H~_j(lk T) != 0. Void and irrelevant complexes have
/// depth 0. `jobs` = 0 uses the default worker count.
int depth(const SimplicialComplex& c, const FieldSpec& field,
          unsigned jobs = 1);

/// Full report; the witness is the first minimal-bound violation in the scan
/// order (empty face, then larger faces before smaller ones, canonical order
/// within a size, lowest degree first).
CMReport analyze_cm(const SimplicialComplex& c, const FieldSpec& field,
                    unsigned jobs = 1);

/// Early-exit CM test. Void and irrelevant complexes are CM.
bool is_cm(const SimplicialComplex& c, const FieldSpec& field);

/// max{ i : the (i-1)-skeleton is CM }.
int depth_by_skeletons(const SimplicialComplex& c, const FieldSpec& field);

/// Serre's condition (S_l): H~_{i-1}(lk T) = 0 whenever i + |T| < d and
/// 0 <= i < l. Always true for l = 1. Throws OutOfRange for l < 1.
bool satisfies_serre(const SimplicialComplex& c, const FieldSpec& field, int l);

/// The ridge-count certificate: l-fold acyclic with at most l-1 boundary
/// ridges in every facet.
struct FastPathCertificate {
  int l = 1;
  int max_boundary_ridges = 0;
};

struct MinimalityReport {
  bool is_cm = false;
  bool is_minimal = false;
  /// Facets F with c_F CM, canonical order. Only computed when brute force
  /// runs.
  std::vector<Face> removable_facets;
  std::optional<FastPathCertificate> fast_path;
  bool brute_forced = false;
};

std::optional<FastPathCertificate> fast_path_certificate(
    const SimplicialComplex& c, const FieldSpec& field);

MinimalityReport is_minimal_cm(const SimplicialComplex& c,
                               const FieldSpec& field, bool use_fast_path,
                               unsigned jobs = 0);

/// CM, and every single-facet removal is CM.
bool is_strongly_cm(const SimplicialComplex& c, const FieldSpec& field,
                    unsigned jobs = 0);

/// Facets whose removal leaves a CM complex, canonical order.
std::vector<Face> removable_facets(const SimplicialComplex& c,
                                   const FieldSpec& field, unsigned jobs = 0);

/// Result of checking whether c_F is certified non-CM by the boundary-ridge
/// criterion.
struct RidgeCertificate {
  enum class Verdict { Certified, NotCertified, Inapplicable };
  Verdict verdict = Verdict::Inapplicable;
  int l = 0;  ///< boundary ridges in F, plus one
  /// Union of the vertices opposite the boundary ridges of F.
  Face sigma;
  /// Top h-entry of lk_{c_F}(sigma); -1 when certified.
  std::int64_t top_h = 0;
  std::string reason;
};

/// Throws NotAFacet.
RidgeCertificate ridge_certificate(const SimplicialComplex& c,
                                   const FieldSpec& field, Face facet);

struct FacetDeath {
  Face facet;
  int depth_before = 0;
  int depth_after = 0;
  Cycle cycle;
};

/// When H~_{d-1} != 0, the first facet (canonical order) in the support of a
/// top cycle. Its removal keeps the (d-2)-skeleton and depth, and lowers only
/// the top Betti number and f_{d-1} by one; these are verified before
/// returning (std::logic_error on violation).
std::optional<FacetDeath> facet_death(const SimplicialComplex& c,
                                      const FieldSpec& field);

/// Facets F such that the boundary ridges inside F are a nonempty proper
/// subset of F's ridges and every face of F lying on the boundary lies in
/// one of them. Throws NotPure.
std::vector<Face> free_facets(const SimplicialComplex& c);
std::optional<Face> free_facet(const SimplicialComplex& c);
/// No free facet, and more than one facet.
bool is_strongly_nonshellable(const SimplicialComplex& c);

/// Necessary conditions for a triangulated ball.
struct BallCheck {
  bool pure = false;
  bool acyclic = false;
  bool ridges_in_at_most_two = false;
  bool dual_graph_connected = false;
  bool boundary_nonempty = false;
  bool boundary_is_homology_sphere = false;

  bool passed() const {
    return pure && acyclic && ridges_in_at_most_two && dual_graph_connected &&
           boundary_nonempty && boundary_is_homology_sphere;
  }
};

BallCheck check_ball_necessary(const SimplicialComplex& c,
                               const FieldSpec& field);

}  // namespace mincm

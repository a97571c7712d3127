#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mincm/complex.hpp"
#include "mincm/field.hpp"

namespace mincm {

/// Replaying `moves` onto `base`, each addition is a shelling move and the
/// result is `target`.
struct ShellingCertificate {
  SimplicialComplex base;
  std::vector<Face> moves;
  SimplicialComplex target;
};

/// Whether c is obtained from c_F by a shelling move: <F> ∩ c_F is pure of
/// dimension |F| - 2. Adding a facet to the void complex counts as a
/// shelling move. Throws NotAFacet.
bool is_shelling_move(const SimplicialComplex& c, Face facet);

/// Checks a certificate by replaying it.
bool replay(const ShellingCertificate& cert);

/// Greedy reduction of a CM complex: repeatedly remove the canonically first
/// facet whose removal stays CM. Throws NotCohenMacaulay.
struct Reduction {
  SimplicialComplex minimal;
  ShellingCertificate certificate;
};
Reduction reduce_to_minimal(const SimplicialComplex& c, const FieldSpec& field,
                            unsigned jobs = 0);

/// Limit on facet count for the exhaustive searches below.
inline constexpr std::size_t kMaxSearchFacets = 64;

/// Exhaustive search for shelling moves taking `base` to `c`. Every facet of
/// `base` must be a facet of `c`, matched by vertex label (MalformedInput
/// otherwise); TooLarge beyond kMaxSearchFacets.
std::optional<ShellingCertificate> shelled_over(const SimplicialComplex& c,
                                                const SimplicialComplex& base);

/// shelled_over(c, void). Throws NotPure.
std::optional<ShellingCertificate> is_shellable(const SimplicialComplex& c);

}  // namespace mincm

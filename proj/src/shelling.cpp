#include "mincm/shelling.hpp"

#include <algorithm>
#include <unordered_set>

#include "mincm/cm.hpp"
#include "mincm/error.hpp"
#include "mincm/parallel.hpp"

namespace mincm {

namespace {

/// <facet> ∩ <others> pure of dimension |facet| - 2, by the intersections
/// with the other facets: the maximal ones must all miss exactly one vertex.
template <class Range>
bool adds_by_shelling(Face facet, const Range& others) {
  bool any = false;
  std::vector<Face> meets;
  for (Face g : others) {
    any = true;
    meets.push_back(facet & g);
  }
  if (!any) return true;
  const int ridge = facet.size() - 1;
  for (Face m : meets) {
    if (m.size() == ridge) continue;
    bool covered = std::any_of(meets.begin(), meets.end(), [&](Face k) {
      return k.size() == ridge && m.is_subset_of(k);
    });
    if (!covered) return false;
  }
  return true;
}

std::vector<Face> facets_in(const std::vector<Face>& all, std::uint64_t mask) {
  std::vector<Face> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if ((mask >> i) & 1U) out.push_back(all[i]);
  return out;
}

}  // namespace

bool is_shelling_move(const SimplicialComplex& c, Face facet) {
  auto idx = c.facet_index(facet);
  if (!idx)
    throw Error(ErrorKind::NotAFacet,
                facet.to_string() + " is not a facet of the complex");
  std::vector<Face> others;
  for (std::size_t i = 0; i < c.num_facets(); ++i)
    if (i != *idx) others.push_back(c.facets()[i]);
  return adds_by_shelling(facet, others);
}

bool replay(const ShellingCertificate& cert) {
  SimplicialComplex current = cert.base;
  for (Face move : cert.moves) {
    if (current.contains(move)) return false;
    SimplicialComplex next = add_facet(current, move);
    if (!is_shelling_move(next, move)) return false;
    current = std::move(next);
  }
  return current == cert.target;
}

Reduction reduce_to_minimal(const SimplicialComplex& c, const FieldSpec& field,
                            unsigned jobs) {
  if (!is_cm(c, field))
    throw Error(ErrorKind::NotCohenMacaulay,
                "reduction needs a CM complex over " + field.name());
  SimplicialComplex current = c;
  std::vector<Face> removed;
  for (;;) {
    const auto& facets = current.facets();
    std::vector<char> ok(facets.size(), 0);
    parallel_for(facets.size(), jobs, [&](std::size_t i) {
      ok[i] = is_cm(remove_facet(current, facets[i]), field) ? 1 : 0;
    });
    auto first = std::find(ok.begin(), ok.end(), 1);
    if (first == ok.end()) break;
    Face f = facets[static_cast<std::size_t>(first - ok.begin())];
    // A CM complex satisfies (S_2), so every removal reverses a shelling move.
    if (!is_shelling_move(current, f))
      throw std::logic_error("removable facet is not a shelling move");
    removed.push_back(f);
    current = remove_facet(current, f);
  }
  Reduction out;
  out.minimal = current;
  out.certificate.base = current;
  out.certificate.moves.assign(removed.rbegin(), removed.rend());
  out.certificate.target = c;
  return out;
}

std::optional<ShellingCertificate> shelled_over(const SimplicialComplex& c,
                                                const SimplicialComplex& base) {
  const auto& all = c.facets();
  if (all.size() > kMaxSearchFacets)
    throw Error(ErrorKind::TooLarge,
                "shelling search supports at most " +
                    std::to_string(kMaxSearchFacets) + " facets");
  // Base facets are matched by vertex label.
  std::uint64_t base_mask = 0;
  for (Face bg : base.facets()) {
    Face g = c.face_of(base.labels_of(bg));
    auto idx = c.facet_index(g);
    if (!idx)
      throw Error(ErrorKind::MalformedInput,
                  "base facet " + g.to_string() + " is not a facet");
    base_mask |= std::uint64_t{1} << *idx;
  }
  const std::uint64_t full =
      all.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << all.size()) - 1;

  // Depth-first growth from the base up to the full complex, adding one
  // shelling move at a time; dead states are memoized. Growing forward
  // prunes far earlier than peeling facets off the full complex.
  std::unordered_set<std::uint64_t> dead;
  std::vector<std::size_t> path;
  auto search = [&](auto&& self, std::uint64_t state) -> bool {
    if (state == full) return true;
    if (dead.count(state) != 0) return false;
    std::vector<Face> current = facets_in(all, state);
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if (state & bit) continue;
      if (!adds_by_shelling(all[i], current)) continue;
      path.push_back(i);
      if (self(self, state | bit)) return true;
      path.pop_back();
    }
    dead.insert(state);
    return false;
  };
  if (!search(search, base_mask)) return std::nullopt;

  ShellingCertificate cert;
  cert.base = SimplicialComplex::from_faces(
      c.num_vertices(), facets_in(all, base_mask), c.labels());
  for (std::size_t i : path) cert.moves.push_back(all[i]);
  cert.target = c;
  return cert;
}

std::optional<ShellingCertificate> is_shellable(const SimplicialComplex& c) {
  if (!is_pure(c))
    throw Error(ErrorKind::NotPure, "shellability is tested on pure complexes");
  return shelled_over(c, SimplicialComplex::void_complex(c.num_vertices()));
}

}  // namespace mincm

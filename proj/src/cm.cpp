#include "mincm/cm.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "mincm/error.hpp"
#include "mincm/parallel.hpp"

namespace mincm {

namespace {

/// Empty face first, then faces by decreasing size, canonical within a size.
std::vector<Face> scan_order(const SimplicialComplex& c) {
  auto buckets = c.faces_by_dim();
  std::vector<Face> order;
  if (buckets.empty()) return order;
  order.push_back(Face{});
  for (std::size_t k = buckets.size(); k-- > 1;)
    order.insert(order.end(), buckets[k].begin(), buckets[k].end());
  return order;
}

/// Lowest homology degree with nonzero link homology, if any.
std::optional<int> lowest_nonzero_degree(const BettiVector& b) {
  for (std::size_t idx = 0; idx < b.dims.size(); ++idx)
    if (b.dims[idx] != 0) return static_cast<int>(idx) - 1;
  return std::nullopt;
}

}  // namespace

CMReport analyze_cm(const SimplicialComplex& c, const FieldSpec& field,
                    unsigned jobs) {
  CMReport report;
  report.field = field;
  if (c.is_void() || c.is_irrelevant()) {
    report.depth = 0;
    report.is_cm = true;
    return report;
  }
  std::vector<Face> order = scan_order(c);
  std::vector<std::optional<int>> lowest(order.size());
  parallel_for(order.size(), jobs, [&](std::size_t i) {
    lowest[i] = lowest_nonzero_degree(
        reduced_homology(link(c, order[i]), field));
  });
  std::optional<DepthWitness> best;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!lowest[i]) continue;
    DepthWitness w{order[i], *lowest[i]};
    if (!best || w.bound() < best->bound()) best = w;
  }
  // Every facet contributes a bound through H~_{-1} of its link.
  report.depth = best->bound();
  report.is_cm = report.depth == c.d();
  if (!report.is_cm) report.witness = best;
  return report;
}

int depth(const SimplicialComplex& c, const FieldSpec& field, unsigned jobs) {
  return analyze_cm(c, field, jobs).depth;
}

bool is_cm(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void() || c.is_irrelevant()) return true;
  if (!is_pure(c)) return false;
  const int d = c.d();
  for (Face t : scan_order(c)) {
    // Top-degree homology of the link never violates.
    int link_dim = d - t.size() - 1;
    if (link_dim < 0) continue;
    BettiVector b = reduced_homology(link(c, t), field);
    for (int j = -1; j < link_dim; ++j)
      if (b[j] != 0) return false;
  }
  return true;
}

int depth_by_skeletons(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void() || c.is_irrelevant()) return 0;
  int best = 0;
  for (int i = 0; i <= c.d(); ++i)
    if (is_cm(skeleton(c, i - 1), field)) best = i;
  return best;
}

bool satisfies_serre(const SimplicialComplex& c, const FieldSpec& field,
                     int l) {
  if (l < 1) throw Error(ErrorKind::OutOfRange, "Serre's condition needs l >= 1");
  if (l == 1 || c.is_void()) return true;
  const int d = c.d();
  for (Face t : scan_order(c)) {
    if (t.size() >= d) continue;
    BettiVector b = reduced_homology(link(c, t), field);
    for (int i = 0; i < l && i + t.size() < d; ++i)
      if (b[i - 1] != 0) return false;
  }
  return true;
}

std::vector<Face> removable_facets(const SimplicialComplex& c,
                                   const FieldSpec& field, unsigned jobs) {
  const auto& facets = c.facets();
  std::vector<char> ok(facets.size(), 0);
  parallel_for(facets.size(), jobs, [&](std::size_t i) {
    ok[i] = is_cm(remove_facet(c, facets[i]), field) ? 1 : 0;
  });
  std::vector<Face> out;
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (ok[i]) out.push_back(facets[i]);
  return out;
}

std::optional<FastPathCertificate> fast_path_certificate(
    const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void() || !is_pure(c)) return std::nullopt;
  auto counts = ridges_per_facet(c);
  int max_ridges = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  FastPathCertificate cert{max_ridges + 1, max_ridges};
  if (!is_l_fold_acyclic(c, field, cert.l)) return std::nullopt;
  if (!is_cm(c, field)) return std::nullopt;
  return cert;
}

MinimalityReport is_minimal_cm(const SimplicialComplex& c,
                               const FieldSpec& field, bool use_fast_path,
                               unsigned jobs) {
  MinimalityReport report;
  report.is_cm = is_cm(c, field);
  if (!report.is_cm) return report;
  if (use_fast_path) {
    report.fast_path = fast_path_certificate(c, field);
    if (report.fast_path) {
      report.is_minimal = true;
      return report;
    }
  }
  report.brute_forced = true;
  report.removable_facets = removable_facets(c, field, jobs);
  report.is_minimal = report.removable_facets.empty();
  return report;
}

bool is_strongly_cm(const SimplicialComplex& c, const FieldSpec& field,
                    unsigned jobs) {
  if (!is_cm(c, field)) return false;
  return removable_facets(c, field, jobs).size() == c.num_facets();
}

RidgeCertificate ridge_certificate(const SimplicialComplex& c,
                                   const FieldSpec& field, Face facet) {
  if (!c.is_facet(facet))
    throw Error(ErrorKind::NotAFacet,
                facet.to_string() + " is not a facet of the complex");
  RidgeCertificate cert;
  std::vector<Face> inside;
  for (Face r : boundary_ridges(c))
    if (r.is_subset_of(facet)) inside.push_back(r);
  cert.l = static_cast<int>(inside.size()) + 1;
  for (Face r : inside) cert.sigma = cert.sigma | (facet - r);

  if (!is_cm(c, field)) {
    cert.reason = "complex is not CM";
    return cert;
  }
  if (!is_l_fold_acyclic(c, field, cert.l)) {
    cert.reason = "complex is not " + std::to_string(cert.l) + "-fold acyclic";
    return cert;
  }
  SimplicialComplex rest = remove_facet(c, facet);
  const int j = cert.sigma.size();
  const int link_d = c.d() - j;
  if (rest.contains(cert.sigma)) {
    FVector f = f_vector(link(rest, cert.sigma));
    cert.top_h = h_vector_from_f(f, link_d).entries.back();
  } else {
    cert.top_h = 0;
  }
  if (cert.top_h == -1) {
    cert.verdict = RidgeCertificate::Verdict::Certified;
    cert.reason = "negative top h-entry in the link of sigma after removal";
  } else {
    cert.verdict = RidgeCertificate::Verdict::NotCertified;
    cert.reason = "top h-entry is " + std::to_string(cert.top_h);
  }
  return cert;
}

std::optional<FacetDeath> facet_death(const SimplicialComplex& c,
                                      const FieldSpec& field) {
  if (c.is_void() || c.is_irrelevant()) return std::nullopt;
  const int top = c.d() - 1;
  BettiVector before = reduced_homology(c, field);
  if (before[top] == 0) return std::nullopt;
  auto cycle = top_cycle(c, field);
  if (!cycle || cycle->support.empty())
    throw std::logic_error("nonzero top homology without a top cycle");

  FacetDeath out;
  out.facet = cycle->support.front();
  out.cycle = std::move(*cycle);
  SimplicialComplex rest = remove_facet(c, out.facet);

  FVector f_before = f_vector(c);
  FVector f_after = f_vector(rest);
  BettiVector after = reduced_homology(rest, field);
  for (int i = -1; i <= top; ++i) {
    std::int64_t df = f_before[i] - f_after[i];
    std::int64_t db = before[i] - after[i];
    if (df != (i == top ? 1 : 0) || db != (i == top ? 1 : 0))
      throw std::logic_error("facet removal changed lower skeleton or homology");
  }
  out.depth_before = depth(c, field);
  out.depth_after = depth(rest, field);
  if (out.depth_before != out.depth_after)
    throw std::logic_error("facet removal along a top cycle changed depth");
  return out;
}

std::vector<Face> free_facets(const SimplicialComplex& c) {
  if (!is_pure(c))
    throw Error(ErrorKind::NotPure, "free facets need a pure complex");
  std::vector<Face> out;
  if (c.d() < 1) return out;
  std::vector<Face> boundary = boundary_ridges(c);
  for (Face f : c.facets()) {
    Face opposite;  // vertices opposite the boundary ridges of f
    int count = 0;
    for (Face r : boundary)
      if (r.is_subset_of(f)) {
        opposite = opposite | (f - r);
        ++count;
      }
    if (count == 0 || count >= c.d()) continue;
    bool ok = std::all_of(boundary.begin(), boundary.end(), [&](Face r) {
      Face s = r & f;
      // s lies in some boundary ridge of f iff it misses an opposite vertex.
      return (opposite - s).size() > 0;
    });
    if (ok) out.push_back(f);
  }
  return out;
}

std::optional<Face> free_facet(const SimplicialComplex& c) {
  auto all = free_facets(c);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_strongly_nonshellable(const SimplicialComplex& c) {
  return c.num_facets() > 1 && free_facets(c).empty();
}

BallCheck check_ball_necessary(const SimplicialComplex& c,
                               const FieldSpec& field) {
  BallCheck check;
  check.pure = !c.is_void() && is_pure(c);
  check.acyclic = is_acyclic(c, field);
  auto incidence = ridge_incidence(c);
  check.ridges_in_at_most_two =
      std::all_of(incidence.begin(), incidence.end(),
                  [](const auto& kv) { return kv.second <= 2; });
  check.dual_graph_connected = dual_graph(c).is_connected();
  if (!check.pure) return check;
  SimplicialComplex boundary = boundary_complex(c);
  check.boundary_nonempty = !boundary.is_void();
  if (check.boundary_nonempty) {
    BettiVector b = reduced_homology(boundary, field);
    const int sphere_dim = c.d() - 2;
    bool sphere = boundary.d() - 1 == sphere_dim;
    for (int i = -1; i <= boundary.dim(); ++i)
      if (b[i] != (i == sphere_dim ? 1 : 0)) sphere = false;
    check.boundary_is_homology_sphere = sphere;
  }
  return check;
}

}  // namespace mincm

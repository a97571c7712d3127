#include "mincm/complex.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "mincm/error.hpp"

namespace mincm {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Io: return "io-error";
    case ErrorKind::FaceNotInComplex: return "face-not-in-complex";
    case ErrorKind::NotAFacet: return "not-a-facet";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NotPure: return "not-pure";
    case ErrorKind::NotCohenMacaulay: return "not-cohen-macaulay";
    case ErrorKind::DegenerateIdeal: return "degenerate-ideal";
    case ErrorKind::UnknownCatalogName: return "unknown-catalog-name";
    case ErrorKind::DataNotBundled: return "data-not-bundled";
    case ErrorKind::TooLarge: return "too-large";
  }
  return "unknown";
}

std::string Face::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_vertex([&](Vertex v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

namespace {

bool is_numeric(const std::string& s) {
  return !s.empty() && s.size() < 18 &&
         std::all_of(s.begin(), s.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; });
}

long long numeric_value(const std::string& s) {
  long long v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

}  // namespace

std::vector<std::string> natural_label_order(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (std::all_of(labels.begin(), labels.end(), is_numeric)) {
    std::stable_sort(labels.begin(), labels.end(),
                     [](const std::string& a, const std::string& b) {
                       return numeric_value(a) < numeric_value(b);
                     });
  }
  return labels;
}

namespace {

std::vector<std::string> natural_order(std::vector<std::string> labels) {
  return natural_label_order(std::move(labels));
}

void check_universe(int n) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorKind::TooLarge,
                "vertex universe of size " + std::to_string(n) +
                    " exceeds the supported maximum of " +
                    std::to_string(kMaxVertices));
}

/// Labels for vertices n_old..n_new-1 that do not collide with existing ones.
std::vector<std::string> extend_labels(const SimplicialComplex& c, int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  std::unordered_set<std::string> used;
  long long next_numeric = 0;
  bool all_numeric = true;
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    out.push_back(c.label(v));
    used.insert(out.back());
    if (is_numeric(out.back()))
      next_numeric = std::max(next_numeric, numeric_value(out.back()) + 1);
    else
      all_numeric = false;
  }
  for (Vertex v = c.num_vertices(); v < n; ++v) {
    std::string candidate =
        all_numeric ? std::to_string(next_numeric++) : std::to_string(v);
    while (used.count(candidate) != 0) candidate += "'";
    used.insert(candidate);
    out.push_back(candidate);
  }
  return out;
}

std::unordered_set<Face> all_faces(const SimplicialComplex& c) {
  std::unordered_set<Face> faces;
  for (Face f : c.facets()) {
    if (f.size() > 30)
      throw Error(ErrorKind::TooLarge,
                  "facet of size " + std::to_string(f.size()) +
                      " is too large for face enumeration");
    f.for_each_subset([&](Face s) { faces.insert(s); });
  }
  return faces;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Calls fn on every k-subset of f.
template <class Fn>
void for_each_k_subset(Face f, int k, Fn&& fn) {
  f.for_each_subset([&](Face s) {
    if (s.size() == k) fn(s);
  });
}

}  // namespace

HVector h_vector_from_f(const FVector& f, int d) {
  HVector h;
  h.entries.assign(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i <= d; ++i) {
    std::int64_t sum = 0;
    for (int k = 0; k <= i; ++k) {
      std::int64_t term = binomial(d - k, i - k) * f[k - 1];
      sum += ((i - k) % 2 == 0) ? term : -term;
    }
    h.entries[static_cast<std::size_t>(i)] = sum;
  }
  return h;
}

std::int64_t reduced_euler_characteristic(const FVector& f) {
  std::int64_t chi = 0;
  for (std::size_t idx = 0; idx < f.entries.size(); ++idx) {
    // idx = i + 1
    chi += (idx % 2 == 1) ? f.entries[idx] : -f.entries[idx];
  }
  return chi;
}

SimplicialComplex SimplicialComplex::from_faces(int n,
                                                std::vector<Face> generators,
                                                std::vector<std::string> labels,
                                                std::size_t* absorbed) {
  check_universe(n);
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::MalformedInput, "label count does not match n");
  for (Face g : generators)
    if (g.span() > n)
      throw Error(ErrorKind::MalformedInput,
                  "face " + g.to_string() + " lies outside the universe of " +
                      std::to_string(n) + " vertices");
  std::size_t input_count = generators.size();
  std::sort(generators.begin(), generators.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
  });
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  std::vector<Face> kept;
  for (Face g : generators) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [g](Face k) { return g.is_subset_of(k); });
    if (!covered) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  if (absorbed) *absorbed = input_count - kept.size();

  SimplicialComplex c;
  c.n_ = n;
  c.facets_ = std::move(kept);
  for (Face f : c.facets_) c.d_ = std::max(c.d_, f.size());
  // Labels that coincide with plain ids carry no information.
  bool trivial = true;
  for (int v = 0; v < static_cast<int>(labels.size()); ++v)
    if (labels[static_cast<std::size_t>(v)] != std::to_string(v)) trivial = false;
  if (!trivial) c.labels_ = std::move(labels);
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facet_labels,
    std::size_t* absorbed) {
  return from_facets_over({}, facet_labels, absorbed);
}

SimplicialComplex SimplicialComplex::from_facets_over(
    std::vector<std::string> universe,
    const std::vector<std::vector<std::string>>& facet_labels,
    std::size_t* absorbed) {
  std::vector<std::string> all = std::move(universe);
  for (const auto& f : facet_labels) all.insert(all.end(), f.begin(), f.end());
  std::vector<std::string> labels = natural_order(std::move(all));
  check_universe(static_cast<int>(labels.size()));
  std::unordered_map<std::string, Vertex> id;
  for (std::size_t i = 0; i < labels.size(); ++i)
    id[labels[i]] = static_cast<Vertex>(i);
  std::vector<Face> gens;
  gens.reserve(facet_labels.size());
  for (const auto& f : facet_labels) {
    Face face;
    for (const auto& l : f) {
      Vertex v = id.at(l);
      if (face.contains(v))
        throw Error(ErrorKind::MalformedInput,
                    "duplicate vertex label '" + l + "' inside one facet");
      face.insert(v);
    }
    gens.push_back(face);
  }
  const int n = static_cast<int>(labels.size());
  return from_faces(n, std::move(gens), std::move(labels), absorbed);
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<int>>& facet_labels, std::size_t* absorbed) {
  std::vector<std::vector<std::string>> as_text;
  as_text.reserve(facet_labels.size());
  for (const auto& f : facet_labels) {
    std::vector<std::string> row;
    for (int v : f) row.push_back(std::to_string(v));
    as_text.push_back(std::move(row));
  }
  return from_facets(as_text, absorbed);
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  return from_faces(n, {});
}

SimplicialComplex SimplicialComplex::irrelevant(int n) {
  return from_faces(n, {Face{}});
}

SimplicialComplex SimplicialComplex::simplex(int n) {
  return from_faces(n, {Face::range(n)});
}

SimplicialComplex SimplicialComplex::boundary_of_simplex(int n) {
  std::vector<Face> gens;
  Face all = Face::range(n);
  for (Vertex v = 0; v < n; ++v) {
    Face f = all;
    f.erase(v);
    gens.push_back(f);
  }
  return from_faces(n, std::move(gens));
}

std::string SimplicialComplex::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(static_cast<std::size_t>(v));
}

std::optional<Vertex> SimplicialComplex::find_vertex(
    const std::string& l) const {
  for (Vertex v = 0; v < n_; ++v)
    if (label(v) == l) return v;
  return std::nullopt;
}

Face SimplicialComplex::face_of(const std::vector<std::string>& ls) const {
  Face f;
  for (const auto& l : ls) {
    auto v = find_vertex(l);
    if (!v)
      throw Error(ErrorKind::MalformedInput, "unknown vertex label '" + l + "'");
    if (f.contains(*v))
      throw Error(ErrorKind::MalformedInput,
                  "duplicate vertex label '" + l + "'");
    f.insert(*v);
  }
  return f;
}

std::vector<std::string> SimplicialComplex::labels_of(Face f) const {
  std::vector<std::string> out;
  f.for_each_vertex([&](Vertex v) { out.push_back(label(v)); });
  return out;
}

Face SimplicialComplex::support() const {
  Face s;
  for (Face f : facets_) s = s | f;
  return s;
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [f](Face g) { return f.is_subset_of(g); });
}

bool SimplicialComplex::is_facet(Face f) const {
  return facet_index(f).has_value();
}

std::optional<std::size_t> SimplicialComplex::facet_index(Face f) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), f, LexLess{});
  if (it != facets_.end() && *it == f)
    return static_cast<std::size_t>(it - facets_.begin());
  return std::nullopt;
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dim() const {
  std::vector<std::vector<Face>> buckets(static_cast<std::size_t>(d_ + 1));
  if (is_void()) return {};
  for (Face f : all_faces(*this))
    buckets[static_cast<std::size_t>(f.size())].push_back(f);
  for (auto& b : buckets) std::sort(b.begin(), b.end(), LexLess{});
  return buckets;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (n_ != other.n_ || facets_ != other.facets_) return false;
  for (Vertex v = 0; v < n_; ++v)
    if (label(v) != other.label(v)) return false;
  return true;
}

FVector f_vector(const SimplicialComplex& c) {
  FVector f;
  for (const auto& bucket : c.faces_by_dim())
    f.entries.push_back(static_cast<std::int64_t>(bucket.size()));
  return f;
}

HVector h_vector(const SimplicialComplex& c) {
  if (c.is_void())
    throw Error(ErrorKind::OutOfRange, "h-vector of the void complex");
  return h_vector_from_f(f_vector(c), c.d());
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& c) {
  return reduced_euler_characteristic(f_vector(c));
}

SimplicialComplex link(const SimplicialComplex& c, Face sigma) {
  if (!c.contains(sigma))
    throw Error(ErrorKind::FaceNotInComplex,
                "face " + sigma.to_string() + " is not in the complex");
  std::vector<Face> gens;
  for (Face f : c.facets())
    if (sigma.is_subset_of(f)) gens.push_back(f - sigma);
  return SimplicialComplex::from_faces(c.num_vertices(), std::move(gens),
                                       c.labels());
}

SimplicialComplex compact(const SimplicialComplex& c) {
  Face used = c.support();
  std::vector<Vertex> old_ids = used.vertices();
  std::vector<Vertex> new_id(static_cast<std::size_t>(c.num_vertices()), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    new_id[static_cast<std::size_t>(old_ids[i])] = static_cast<Vertex>(i);
    labels.push_back(c.label(old_ids[i]));
  }
  std::vector<Face> gens;
  for (Face f : c.facets()) {
    Face g;
    f.for_each_vertex(
        [&](Vertex v) { g.insert(new_id[static_cast<std::size_t>(v)]); });
    gens.push_back(g);
  }
  return SimplicialComplex::from_faces(static_cast<int>(old_ids.size()),
                                       std::move(gens), std::move(labels));
}

SimplicialComplex remove_facet(const SimplicialComplex& c, Face facet) {
  auto idx = c.facet_index(facet);
  if (!idx)
    throw Error(ErrorKind::NotAFacet,
                facet.to_string() + " is not a facet of the complex");
  std::vector<Face> gens = c.facets();
  gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(*idx));
  return SimplicialComplex::from_faces(c.num_vertices(), std::move(gens),
                                       c.labels());
}

SimplicialComplex add_facet(const SimplicialComplex& c, Face facet) {
  std::vector<Face> gens = c.facets();
  gens.push_back(facet);
  return SimplicialComplex::from_faces(c.num_vertices(), std::move(gens),
                                       c.labels());
}

SimplicialComplex facet_subcomplex(const SimplicialComplex& c,
                                   const std::vector<bool>& keep) {
  std::vector<Face> gens;
  for (std::size_t i = 0; i < c.num_facets() && i < keep.size(); ++i)
    if (keep[i]) gens.push_back(c.facets()[i]);
  return SimplicialComplex::from_faces(c.num_vertices(), std::move(gens),
                                       c.labels());
}

SimplicialComplex skeleton(const SimplicialComplex& c, int i) {
  if (i < -1 || i > c.dim())
    throw Error(ErrorKind::OutOfRange,
                "skeleton dimension " + std::to_string(i) +
                    " outside [-1, " + std::to_string(c.dim()) + "]");
  if (c.is_void()) return c;
  std::unordered_set<Face> gens;
  for (Face f : c.facets()) {
    int k = std::min(f.size(), i + 1);
    for_each_k_subset(f, k, [&](Face s) { gens.insert(s); });
  }
  return SimplicialComplex::from_faces(
      c.num_vertices(), std::vector<Face>(gens.begin(), gens.end()),
      c.labels());
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, Face w) {
  if (c.is_void()) return c;
  std::vector<Face> gens;
  for (Face f : c.facets()) gens.push_back(f & w);
  return SimplicialComplex::from_faces(c.num_vertices(), std::move(gens),
                                       c.labels());
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  int n = a.num_vertices() + b.num_vertices();
  check_universe(n);
  std::unordered_set<std::string> used;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    labels.push_back(a.label(v));
    used.insert(labels.back());
  }
  for (Vertex v = 0; v < b.num_vertices(); ++v) {
    std::string l = b.label(v);
    while (used.count(l) != 0) l += "'";
    used.insert(l);
    labels.push_back(l);
  }
  std::vector<Face> gens;
  for (Face f : a.facets())
    for (Face g : b.facets())
      gens.push_back(f | Face(g.bits() << a.num_vertices()));
  return SimplicialComplex::from_faces(n, std::move(gens), std::move(labels));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c, int n) {
  if (n < c.num_vertices())
    throw Error(ErrorKind::OutOfRange,
                "universe size " + std::to_string(n) +
                    " is smaller than the complex's " +
                    std::to_string(c.num_vertices()) + " vertices");
  check_universe(n);
  if (c.is_void()) return {Face{}};
  std::unordered_set<Face> faces = all_faces(c);
  std::set<Face, LexLess> found;
  // Level-by-level expansion: a minimal non-face has all its facets (in the
  // boundary sense) in the complex, so it has size at most d + 1.
  std::vector<Face> level = {Face{}};
  for (int size = 0; size <= c.d() && !level.empty(); ++size) {
    std::unordered_set<Face> next_level;
    for (Face t : level) {
      for (Vertex v = t.span(); v < n; ++v) {
        Face s = t;
        s.insert(v);
        if (faces.count(s) != 0) {
          next_level.insert(s);
          continue;
        }
        bool minimal = true;
        s.for_each_vertex([&](Vertex u) {
          Face sub = s;
          sub.erase(u);
          if (minimal && faces.count(sub) == 0) minimal = false;
        });
        if (minimal) found.insert(s);
      }
    }
    level.assign(next_level.begin(), next_level.end());
  }
  return {found.begin(), found.end()};
}

SimplicialComplex alexander_dual(const SimplicialComplex& c, int n) {
  std::vector<Face> gens;
  Face all = Face::range(n);
  for (Face m : minimal_nonfaces(c, n)) gens.push_back(all - m);
  return SimplicialComplex::from_faces(n, std::move(gens), extend_labels(c, n));
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  return alexander_dual(c, c.num_vertices());
}

std::map<Face, int, LexLess> ridge_incidence(const SimplicialComplex& c) {
  std::map<Face, int, LexLess> counts;
  if (c.d() < 1) return counts;
  int k = c.d() - 1;
  for (Face f : c.facets())
    if (f.size() >= k) for_each_k_subset(f, k, [&](Face s) { ++counts[s]; });
  return counts;
}

std::vector<Face> boundary_ridges(const SimplicialComplex& c) {
  std::vector<Face> out;
  for (const auto& [ridge, count] : ridge_incidence(c))
    if (count == 1) out.push_back(ridge);
  return out;
}

SimplicialComplex boundary_complex(const SimplicialComplex& c) {
  if (!is_pure(c))
    throw Error(ErrorKind::NotPure, "boundary complex needs a pure complex");
  return SimplicialComplex::from_faces(c.num_vertices(), boundary_ridges(c),
                                       c.labels());
}

std::vector<int> ridges_per_facet(const SimplicialComplex& c) {
  std::vector<int> out(c.num_facets(), 0);
  auto counts = ridge_incidence(c);
  for (std::size_t i = 0; i < c.num_facets(); ++i) {
    Face f = c.facets()[i];
    if (f.size() != c.d()) continue;
    for_each_k_subset(f, c.d() - 1, [&](Face s) {
      if (counts.at(s) == 1) ++out[i];
    });
  }
  return out;
}

bool has_no_boundary_ridges(const SimplicialComplex& c) {
  return boundary_ridges(c).empty();
}

bool is_pure(const SimplicialComplex& c) {
  return std::all_of(c.facets().begin(), c.facets().end(),
                     [&](Face f) { return f.size() == c.d(); });
}

bool DualGraph::is_connected() const {
  if (adjacency.size() <= 1) return true;
  std::vector<bool> seen(adjacency.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    std::size_t u = todo.front();
    todo.pop();
    for (std::size_t w : adjacency[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        todo.push(w);
      }
  }
  return reached == adjacency.size();
}

DualGraph dual_graph(const SimplicialComplex& c) {
  DualGraph g;
  const auto& fs = c.facets();
  g.adjacency.resize(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if ((fs[i] & fs[j]).size() == c.d() - 1) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  return g;
}

bool is_pseudomanifold(const SimplicialComplex& c) {
  if (c.d() < 1 || !is_pure(c)) return false;
  if (!dual_graph(c).is_connected()) return false;
  for (const auto& [ridge, count] : ridge_incidence(c))
    if (count != 2) return false;
  return true;
}

namespace {

struct SharedUniverse {
  std::vector<std::string> labels;
  std::vector<Face> a_facets;
  std::vector<Face> b_facets;
};

SharedUniverse share_labels(const SimplicialComplex& a,
                            const SimplicialComplex& b) {
  std::vector<std::string> all;
  for (Vertex v = 0; v < a.num_vertices(); ++v) all.push_back(a.label(v));
  for (Vertex v = 0; v < b.num_vertices(); ++v) all.push_back(b.label(v));
  SharedUniverse u;
  u.labels = natural_order(std::move(all));
  check_universe(static_cast<int>(u.labels.size()));
  std::unordered_map<std::string, Vertex> id;
  for (std::size_t i = 0; i < u.labels.size(); ++i)
    id[u.labels[i]] = static_cast<Vertex>(i);
  auto remap = [&](const SimplicialComplex& c, std::vector<Face>& out) {
    for (Face f : c.facets()) {
      Face g;
      f.for_each_vertex([&](Vertex v) { g.insert(id.at(c.label(v))); });
      out.push_back(g);
    }
  };
  remap(a, u.a_facets);
  remap(b, u.b_facets);
  return u;
}

}  // namespace

SimplicialComplex glue(const SimplicialComplex& a, const SimplicialComplex& b) {
  SharedUniverse u = share_labels(a, b);
  std::vector<Face> gens = u.a_facets;
  gens.insert(gens.end(), u.b_facets.begin(), u.b_facets.end());
  int n = static_cast<int>(u.labels.size());
  return SimplicialComplex::from_faces(n, std::move(gens), std::move(u.labels));
}

SimplicialComplex intersect(const SimplicialComplex& a,
                            const SimplicialComplex& b) {
  SharedUniverse u = share_labels(a, b);
  std::vector<Face> gens;
  for (Face f : u.a_facets)
    for (Face g : u.b_facets) gens.push_back(f & g);
  int n = static_cast<int>(u.labels.size());
  return SimplicialComplex::from_faces(n, std::move(gens), std::move(u.labels));
}

std::vector<std::vector<std::string>> labeled_facets(
    const SimplicialComplex& c) {
  std::vector<std::vector<std::string>> out;
  for (Face f : c.facets()) out.push_back(c.labels_of(f));
  return out;
}

}  // namespace mincm

#include "mincm/report.hpp"

#include <chrono>
#include <sstream>

#include "mincm/error.hpp"
#include "mincm/io.hpp"

namespace mincm {

using nlohmann::ordered_json;

namespace {

ordered_json face_json(const SimplicialComplex& c, Face f) {
  return ordered_json(io::face_to_json(c, f));
}

ordered_json faces_json(const SimplicialComplex& c, const std::vector<Face>& fs) {
  ordered_json out = ordered_json::array();
  for (Face f : fs) out.push_back(face_json(c, f));
  return out;
}

template <class Vec>
std::string tuple_text(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string face_text(const SimplicialComplex& c, Face f) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : c.labels_of(f)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

AnalysisReport analyze(const SimplicialComplex& c, const FieldSpec& field,
                       const std::string& input, const AnalyzeOptions& options) {
  auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.input = input;
  r.field = field;
  r.complex = c;
  r.f = f_vector(c);
  if (!c.is_void()) r.h = h_vector(c);
  r.betti = reduced_homology(c, field);
  r.pure = is_pure(c);
  r.acyclic = is_acyclic(c, field);
  r.pseudomanifold = is_pseudomanifold(c);
  r.cm = analyze_cm(c, field, options.jobs);

  if (r.cm.is_cm && options.removal_sweep) {
    r.fast_path = fast_path_certificate(c, field);
    r.minimality = is_minimal_cm(c, field, /*use_fast_path=*/false, options.jobs);
    r.minimality->fast_path = r.fast_path;
    r.strongly_cm =
        r.minimality->removable_facets.size() == c.facets().size();
  } else if (!r.cm.is_cm) {
    MinimalityReport m;
    m.is_cm = false;
    r.minimality = m;
    r.strongly_cm = false;
  }

  if (!r.pure) {
    r.shelling_note = "not pure";
  } else if (c.facets().size() > options.shelling_facet_limit) {
    r.shelling_note = "skipped: more than " +
                      std::to_string(options.shelling_facet_limit) + " facets";
  } else {
    r.shelling_searched = true;
    r.shelling = is_shellable(c);
  }

  if (r.pure && !c.is_void() && !c.is_irrelevant()) r.free_facets = free_facets(c);

  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

ordered_json to_json(const AnalysisReport& r) {
  const SimplicialComplex& c = r.complex;
  ordered_json doc;
  doc["input"] = r.input;
  doc["field"] = r.field.name();
  doc["vertices"] = c.num_vertices();
  doc["facets"] = c.facets().size();
  doc["dimension"] = c.dim();
  doc["f_vector"] = r.f.entries;
  doc["h_vector"] = r.h ? ordered_json(r.h->entries) : ordered_json(nullptr);
  {
    ordered_json betti;
    betti["field"] = r.field.name();
    betti["from_degree"] = -1;
    betti["dims"] = r.betti.dims;
    doc["reduced_betti"] = betti;
  }
  doc["pure"] = r.pure;
  doc["pseudomanifold"] = r.pseudomanifold;
  doc["acyclic"] = {{"field", r.field.name()}, {"value", r.acyclic}};

  ordered_json cm;
  cm["field"] = r.field.name();
  cm["d"] = c.d();
  cm["depth"] = r.cm.depth;
  cm["is_cm"] = r.cm.is_cm;
  if (r.cm.witness) {
    cm["witness"] = {{"face", face_json(c, r.cm.witness->face)},
                     {"degree", r.cm.witness->degree}};
  } else {
    cm["witness"] = nullptr;
  }
  doc["cohen_macaulay"] = cm;

  ordered_json minimal;
  minimal["field"] = r.field.name();
  if (r.minimality) {
    minimal["is_minimal"] = r.minimality->is_minimal;
    minimal["strongly_cm"] = r.strongly_cm ? ordered_json(*r.strongly_cm)
                                           : ordered_json(nullptr);
    minimal["brute_forced"] = r.minimality->brute_forced;
    minimal["removable_facets"] = faces_json(c, r.minimality->removable_facets);
  } else {
    minimal["is_minimal"] = nullptr;
    minimal["strongly_cm"] = nullptr;
    minimal["brute_forced"] = false;
    minimal["removable_facets"] = ordered_json::array();
  }
  if (r.fast_path) {
    minimal["fast_path"] = {{"l", r.fast_path->l},
                            {"max_boundary_ridges", r.fast_path->max_boundary_ridges}};
  } else {
    minimal["fast_path"] = nullptr;
  }
  doc["minimality"] = minimal;

  ordered_json shelling;
  shelling["searched"] = r.shelling_searched;
  if (r.shelling_searched) {
    shelling["shellable"] = r.shelling.has_value();
    if (r.shelling)
      shelling["order"] = faces_json(c, r.shelling->moves);
  } else {
    shelling["shellable"] = nullptr;
    shelling["note"] = r.shelling_note;
  }
  doc["shelling"] = shelling;

  doc["free_facets"] =
      r.free_facets ? faces_json(c, *r.free_facets) : ordered_json(nullptr);
  doc["timing"] = {{"elapsed_ms", r.elapsed_ms}};
  return doc;
}

std::string to_text(const AnalysisReport& r) {
  const SimplicialComplex& c = r.complex;
  std::ostringstream out;
  out << "input:           " << r.input << "\n";
  out << "field:           " << r.field.name() << "\n";
  out << "vertices:        " << c.num_vertices() << "\n";
  out << "facets:          " << c.facets().size() << " (dimension " << c.dim()
      << (r.pure ? ", pure" : ", not pure") << ")\n";
  out << "f-vector:        " << tuple_text(r.f.entries) << "\n";
  if (r.h) out << "h-vector:        " << tuple_text(r.h->entries) << "\n";
  out << "reduced betti:   " << tuple_text(r.betti.dims)
      << "  (degrees -1..)\n";
  out << "acyclic:         " << yes_no(r.acyclic) << "\n";
  out << "pseudomanifold:  " << yes_no(r.pseudomanifold) << "\n";
  out << "depth:           " << r.cm.depth << " of d = " << c.d() << "\n";
  out << "cohen-macaulay:  " << yes_no(r.cm.is_cm);
  if (r.cm.witness)
    out << "  (H~_" << r.cm.witness->degree << " of lk "
        << face_text(c, r.cm.witness->face) << " is nonzero)";
  out << "\n";
  if (r.minimality) {
    out << "minimal cm:      " << yes_no(r.minimality->is_minimal);
    if (r.minimality->is_cm && !r.minimality->is_minimal &&
        !r.minimality->removable_facets.empty())
      out << "  (removable facet "
          << face_text(c, r.minimality->removable_facets.front()) << ", "
          << r.minimality->removable_facets.size() << " in total)";
    out << "\n";
  }
  if (r.strongly_cm) out << "strongly cm:     " << yes_no(*r.strongly_cm) << "\n";
  if (r.fast_path)
    out << "ridge criterion: certified (l = " << r.fast_path->l
        << ", at most " << r.fast_path->max_boundary_ridges
        << " boundary ridges per facet)\n";
  out << "shellable:       ";
  if (!r.shelling_searched)
    out << "not searched (" << r.shelling_note << ")\n";
  else
    out << yes_no(r.shelling.has_value()) << "\n";
  if (r.free_facets) {
    out << "free facets:     " << r.free_facets->size();
    if (!r.free_facets->empty())
      out << "  (first " << face_text(c, r.free_facets->front()) << ")";
    out << "\n";
  }
  out << "time:            " << static_cast<long long>(r.elapsed_ms) << " ms\n";
  return out.str();
}

}  // namespace mincm

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mincm/cm.hpp"
#include "mincm/complex.hpp"
#include "mincm/field.hpp"
#include "mincm/homology.hpp"
#include "mincm/shelling.hpp"

namespace mincm {

struct AnalyzeOptions {
  unsigned jobs = 0;
  /// Shellability is searched only up to this many facets.
  std::size_t shelling_facet_limit = 48;
  /// Run the per-facet removal sweep (minimal / strongly CM verdicts).
  bool removal_sweep = true;
};

/// Everything `mincm analyze` reports about one complex over one field.
struct AnalysisReport {
  std::string input;
  FieldSpec field = FieldSpec::rationals();
  SimplicialComplex complex;

  FVector f;
  std::optional<HVector> h;
  BettiVector betti;
  bool pure = false;
  bool acyclic = false;
  bool pseudomanifold = false;

  CMReport cm;
  /// Present when the removal sweep ran on a CM complex.
  std::optional<MinimalityReport> minimality;
  std::optional<bool> strongly_cm;
  std::optional<FastPathCertificate> fast_path;

  /// Shellability: searched, and a certificate when found.
  bool shelling_searched = false;
  std::optional<ShellingCertificate> shelling;
  std::string shelling_note;

  /// Free facets (pure complexes only).
  std::optional<std::vector<Face>> free_facets;

  double elapsed_ms = 0.0;
};

AnalysisReport analyze(const SimplicialComplex& c, const FieldSpec& field,
                       const std::string& input,
                       const AnalyzeOptions& options = {});

/// Structured form. Keys are emitted in a fixed order; "timing" is the only
/// run-dependent entry.
nlohmann::ordered_json to_json(const AnalysisReport& report);

/// Human-readable summary.
std::string to_text(const AnalysisReport& report);

}  // namespace mincm

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mincm/complex.hpp"

namespace mincm::catalog {

/// Verdicts an entry must reproduce over one field.
struct ExpectedVerdict {
  std::string field;
  bool is_cm = false;
  int depth = 0;
  std::optional<bool> is_minimal;
  std::optional<bool> is_acyclic;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::int64_t> f_vector;
  std::vector<ExpectedVerdict> expected;
  /// Set for entries ingested as triangulated balls.
  bool ball = false;
  std::optional<bool> strongly_nonshellable;
  /// Bundled facet file (plain-text format) for data-backed entries.
  bool data_backed = false;
};

/// Fixed-name entries with their expected-property blocks.
const std::vector<CatalogEntry>& entries();

/// Every accepted name pattern, for listings.
std::vector<std::string> names();

/// Names the catalog knows but does not ship data for.
const std::vector<std::string>& reserved_names();

/// Looks up `name`: a fixed entry, simplex_<n>, boundary_simplex_<n>,
/// skeleton_<n>_<i> (alias k_<n>_<i>). A <name>.txt file in MINCM_DATA_DIR
/// takes precedence. Throws UnknownCatalogName, or DataNotBundled for
/// reserved names without a supplied file.
SimplicialComplex get(const std::string& name);

/// Plain-text facet file for `name`, with a provenance header for bundled
/// entries.
std::string emit(const std::string& name);

/// Raw bundled text of a data-backed entry, or nullopt.
std::optional<std::string> bundled_text(const std::string& name);

std::optional<std::string> data_dir();

/// Pure complex on n vertices: each d-subset is kept independently with
/// probability `density` (at least one is always kept), then re-indexed onto
/// the vertices used. Deterministic for a fixed seed.
SimplicialComplex random_complex(int n, int d, double density,
                                 std::uint64_t seed);

/// Same, drawing subsets of every size 1..max_size; generally not pure.
SimplicialComplex random_mixed_complex(int n, int max_size, double density,
                                       std::uint64_t seed);

/// Parameter ranges for random_with.
struct RandomShape {
  int min_n = 4;
  int max_n = 8;
  int min_d = 2;
  int max_d = 4;
  double min_density = 0.2;
  double max_density = 0.9;
  bool pure = true;
};

/// Rejection sampling: draws up to `budget` complexes and returns the first
/// satisfying `predicate`.
std::optional<SimplicialComplex> random_with(
    const std::function<bool(const SimplicialComplex&)>& predicate, int budget,
    std::uint64_t seed, const RandomShape& shape = {});

}  // namespace mincm::catalog

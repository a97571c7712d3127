#include "mincm/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <regex>

#include "mincm/error.hpp"
#include "mincm/io.hpp"

namespace mincm::catalog {

namespace detail {
const std::map<std::string, std::string>& bundled_files();
}

namespace {

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;
  {
    CatalogEntry e;
    e.name = "rp2_6";
    e.description =
        "six-vertex real projective plane; CM exactly in characteristic != 2";
    e.f_vector = {1, 6, 15, 10};
    e.expected = {{"gf2", false, 2, std::nullopt, false},
                  {"gf3", true, 3, true, true},
                  {"q", true, 3, true, true}};
    e.data_backed = true;
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "dunce_hat_8";
    e.description = "contractible, non-collapsible dunce hat; no boundary ridges";
    e.f_vector = {1, 8, 24, 17};
    e.expected = {{"q", true, 3, true, true},
                  {"gf2", true, 3, true, true},
                  {"gf3", true, 3, true, true}};
    e.data_backed = true;
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "rudin_ball";
    e.description = "Rudin's non-shellable 3-ball";
    e.f_vector = {1, 14, 66, 94, 41};
    e.expected = {{"q", true, 4, true, true}};
    e.ball = true;
    e.strongly_nonshellable = true;
    e.data_backed = true;
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "ziegler_ball";
    e.description = "Ziegler's non-shellable 3-ball";
    e.f_vector = {1, 10, 38, 50, 21};
    e.expected = {{"q", true, 4, true, true}};
    e.ball = true;
    e.strongly_nonshellable = true;
    e.data_backed = true;
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "octahedron";
    e.description = "boundary of the octahedron, a 2-sphere";
    e.f_vector = {1, 6, 12, 8};
    e.expected = {{"q", true, 3, false, false}};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "k_6_2";
    e.description = "complete two-skeleton of the simplex on six vertices";
    e.f_vector = {1, 6, 15, 20};
    e.expected = {{"q", true, 3, false, false}};
    out.push_back(e);
  }
  return out;
}

SimplicialComplex octahedron() {
  // Antipodal pairs {0,1}, {2,3}, {4,5}; a facet picks one from each pair.
  std::vector<Face> gens;
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 4; ++b)
      for (int c = 4; c < 6; ++c) gens.push_back(Face{a, b, c});
  return SimplicialComplex::from_faces(6, std::move(gens));
}

std::optional<SimplicialComplex> from_data_dir(const std::string& name) {
  auto dir = data_dir();
  if (!dir) return std::nullopt;
  std::filesystem::path path = std::filesystem::path(*dir) / (name + ".txt");
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  return io::read_file(path.string());
}

int parse_count(const std::string& s, const std::string& name) {
  int v = std::stoi(s);
  if (v < 0 || v > kMaxVertices)
    throw Error(ErrorKind::OutOfRange, "parameter out of range in '" + name + "'");
  return v;
}

std::uint64_t next_bits(std::mt19937_64& gen) { return gen(); }

bool draw(std::mt19937_64& gen, double p) {
  // 53 random bits -> [0, 1)
  return static_cast<double>(next_bits(gen) >> 11) * 0x1.0p-53 < p;
}

SimplicialComplex random_from_sizes(int n, int min_size, int max_size,
                                    double density, std::uint64_t seed) {
  if (n < 1 || n > 20 || min_size < 1 || max_size > n || min_size > max_size)
    throw Error(ErrorKind::OutOfRange, "random complex parameters out of range");
  std::mt19937_64 gen(seed);
  std::vector<Face> kept;
  std::vector<Face> candidates;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < count; ++s) {
    Face f(s);
    if (f.size() < min_size || f.size() > max_size) continue;
    candidates.push_back(f);
  }
  std::sort(candidates.begin(), candidates.end(), LexLess{});
  for (Face f : candidates)
    if (draw(gen, density)) kept.push_back(f);
  if (kept.empty()) kept.push_back(candidates[next_bits(gen) % candidates.size()]);
  return compact(SimplicialComplex::from_faces(n, std::move(kept)));
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = build_entries();
  return all;
}

const std::vector<std::string>& reserved_names() {
  static const std::vector<std::string> names = {
      "bings_house", "pastry", "dg16_c3", "jv17_c3", "dg18_omega3"};
  return names;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  out.push_back("simplex_<n>");
  out.push_back("boundary_simplex_<n>");
  out.push_back("skeleton_<n>_<i>");
  out.push_back("k_<n>_<i>");
  return out;
}

std::optional<std::string> data_dir() {
  if (const char* env = std::getenv("MINCM_DATA_DIR"); env && *env)
    return std::string(env);
  return std::nullopt;
}

std::optional<std::string> bundled_text(const std::string& name) {
  const auto& files = detail::bundled_files();
  auto it = files.find(name);
  if (it == files.end()) return std::nullopt;
  return it->second;
}

SimplicialComplex get(const std::string& name) {
  if (auto user = from_data_dir(name)) return *user;
  if (auto text = bundled_text(name)) return io::parse_text(*text);
  if (name == "octahedron") return octahedron();

  static const std::regex simplex_re(R"(simplex_(\d+))");
  static const std::regex boundary_re(R"(boundary_simplex_(\d+))");
  static const std::regex skeleton_re(R"((?:skeleton|k)_(\d+)_(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, simplex_re))
    return SimplicialComplex::simplex(parse_count(m[1], name));
  if (std::regex_match(name, m, boundary_re))
    return SimplicialComplex::boundary_of_simplex(parse_count(m[1], name));
  if (std::regex_match(name, m, skeleton_re)) {
    int n = parse_count(m[1], name);
    int i = parse_count(m[2], name);
    return skeleton(SimplicialComplex::simplex(n), i);
  }
  const auto& reserved = reserved_names();
  if (std::find(reserved.begin(), reserved.end(), name) != reserved.end())
    throw Error(ErrorKind::DataNotBundled,
                "catalog entry '" + name +
                    "': data not bundled; supply a facet file as " + name +
                    ".txt in the directory named by MINCM_DATA_DIR");
  throw Error(ErrorKind::UnknownCatalogName,
              "unknown catalog name '" + name + "'");
}

std::string emit(const std::string& name) {
  if (!from_data_dir(name))
    if (auto text = bundled_text(name)) return *text;
  return "# " + name + "\n" + io::write_text(get(name));
}

SimplicialComplex random_complex(int n, int d, double density,
                                 std::uint64_t seed) {
  return random_from_sizes(n, d, d, density, seed);
}

SimplicialComplex random_mixed_complex(int n, int max_size, double density,
                                       std::uint64_t seed) {
  return random_from_sizes(n, 1, max_size, density, seed);
}

std::optional<SimplicialComplex> random_with(
    const std::function<bool(const SimplicialComplex&)>& predicate, int budget,
    std::uint64_t seed, const RandomShape& shape) {
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    int n = shape.min_n + static_cast<int>(next_bits(gen) %
                                           static_cast<std::uint64_t>(
                                               shape.max_n - shape.min_n + 1));
    int d = shape.min_d + static_cast<int>(next_bits(gen) %
                                           static_cast<std::uint64_t>(
                                               shape.max_d - shape.min_d + 1));
    d = std::min(d, n);
    double density = shape.min_density +
                     (shape.max_density - shape.min_density) *
                         (static_cast<double>(next_bits(gen) >> 11) * 0x1.0p-53);
    std::uint64_t sub_seed = next_bits(gen);
    SimplicialComplex c = shape.pure
                              ? random_complex(n, d, density, sub_seed)
                              : random_mixed_complex(n, d, density, sub_seed);
    if (predicate(c)) return c;
  }
  return std::nullopt;
}

}  // namespace mincm::catalog

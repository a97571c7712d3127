// mincm: command-line front end for Cohen-Macaulay, minimality, shelling and
// Alexander-dual analysis of simplicial complexes.
//
// Exit codes: 0 success, 1 a checked property is false (with --expect),
// 2 usage, input or I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mincm/catalog.hpp"
#include "mincm/cm.hpp"
#include "mincm/dual.hpp"
#include "mincm/error.hpp"
#include "mincm/io.hpp"
#include "mincm/parallel.hpp"
#include "mincm/report.hpp"
#include "mincm/shelling.hpp"

namespace {

using nlohmann::ordered_json;
using namespace mincm;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string field = "q";
  bool json = false;
  unsigned jobs = 0;
};

/// Loads `catalog:<name>` or a file path.
SimplicialComplex load(const std::string& input) {
  const std::string prefix = "catalog:";
  if (input.rfind(prefix, 0) == 0) return catalog::get(input.substr(prefix.size()));
  return io::read_file(input);
}

std::string stem_of(const std::string& input) {
  const std::string prefix = "catalog:";
  if (input.rfind(prefix, 0) == 0) return input.substr(prefix.size());
  return std::filesystem::path(input).stem().string();
}

void print_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int verdict_exit(bool value, bool expect) {
  return (expect && !value) ? kExitFalse : kExitOk;
}

std::string faces_line(const SimplicialComplex& c, const std::vector<Face>& fs) {
  std::string out;
  for (Face f : fs) {
    out += "  ";
    bool first = true;
    for (const auto& l : c.labels_of(f)) {
      if (!first) out += ' ';
      out += l;
      first = false;
    }
    if (f.empty()) out += "{}";
    out += "\n";
  }
  return out;
}

ordered_json faces_json(const SimplicialComplex& c, const std::vector<Face>& fs) {
  ordered_json out = ordered_json::array();
  for (Face f : fs) out.push_back(ordered_json(io::face_to_json(c, f)));
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
}

// ---------------------------------------------------------------------------

int cmd_analyze(const Common& common, const std::string& input,
                const std::string& expect, bool no_sweep,
                std::size_t shelling_limit) {
  FieldSpec field = FieldSpec::parse(common.field);
  SimplicialComplex c = load(input);
  AnalyzeOptions options;
  options.jobs = common.jobs;
  options.removal_sweep = !no_sweep;
  options.shelling_facet_limit = shelling_limit;
  AnalysisReport report = analyze(c, field, input, options);
  if (common.json)
    print_json(to_json(report));
  else
    std::cout << to_text(report);

  if (expect.empty()) return kExitOk;
  bool value = false;
  if (expect == "cm") {
    value = report.cm.is_cm;
  } else if (expect == "minimal") {
    value = report.minimality && report.minimality->is_minimal;
  } else if (expect == "strongly-cm") {
    value = report.strongly_cm.value_or(false);
  } else if (expect == "acyclic") {
    value = report.acyclic;
  } else if (expect == "shellable") {
    value = report.shelling.has_value();
  }
  return verdict_exit(value, true);
}

int cmd_reduce(const Common& common, const std::string& input,
               const std::string& out_dir) {
  FieldSpec field = FieldSpec::parse(common.field);
  SimplicialComplex c = load(input);
  Reduction red = reduce_to_minimal(c, field, common.jobs);
  if (!replay(red.certificate))
    throw std::logic_error("reduction certificate failed to replay");

  std::filesystem::path dir(out_dir);
  std::string stem = stem_of(input);
  std::filesystem::path minimal_path = dir / (stem + ".minimal.txt");
  std::filesystem::path cert_path = dir / (stem + ".certificate.json");
  write_file(minimal_path, io::write_text(red.minimal));
  write_file(cert_path, io::to_json(red.certificate).dump(2) + "\n");

  if (common.json) {
    ordered_json doc;
    doc["input"] = input;
    doc["field"] = field.name();
    doc["minimal_facets"] = red.minimal.facets().size();
    doc["moves"] = red.certificate.moves.size();
    doc["replays"] = true;
    doc["minimal_file"] = minimal_path.string();
    doc["certificate_file"] = cert_path.string();
    print_json(doc);
  } else {
    std::cout << "minimal complex: " << red.minimal.facets().size()
              << " facets -> " << minimal_path.string() << "\n"
              << "certificate:     " << red.certificate.moves.size()
              << " shelling moves (replays) -> " << cert_path.string() << "\n";
  }
  return kExitOk;
}

int report_shelling(const Common& common, const std::string& input,
                    const std::optional<ShellingCertificate>& cert, bool expect) {
  if (common.json) {
    ordered_json doc;
    doc["input"] = input;
    doc["found"] = cert.has_value();
    if (cert) {
      doc["moves"] = faces_json(cert->target, cert->moves);
      doc["certificate"] = ordered_json(io::to_json(*cert));
    }
    print_json(doc);
  } else if (cert) {
    std::cout << "certificate: " << cert->moves.size() << " moves\n"
              << faces_line(cert->target, cert->moves);
  } else {
    std::cout << "no certificate\n";
  }
  return verdict_exit(cert.has_value(), expect);
}

int cmd_shellable(const Common& common, const std::string& input, bool expect) {
  return report_shelling(common, input, is_shellable(load(input)), expect);
}

int cmd_shelled_over(const Common& common, const std::string& input,
                     const std::string& base, bool expect) {
  return report_shelling(common, input, shelled_over(load(input), load(base)),
                         expect);
}

int cmd_dual(const Common& common, const std::string& input, int n,
             bool quotients) {
  SimplicialComplex c = load(input);
  if (n < 0) n = c.num_vertices();
  SquarefreeIdeal ideal = dual_ideal(c, n);
  SimplicialComplex dual = alexander_dual(c, n);
  std::optional<std::vector<Face>> order;
  if (quotients) order = linear_quotients_order(ideal);

  if (common.json) {
    ordered_json doc;
    doc["input"] = input;
    doc["n"] = n;
    doc["ideal"] = ordered_json(io::to_json(ideal, c));
    auto deg = ideal.common_degree();
    doc["generator_degree"] = deg ? ordered_json(*deg) : ordered_json(nullptr);
    doc["dual_complex"] = ordered_json(io::to_json(dual));
    if (quotients)
      doc["linear_quotients"] =
          order ? faces_json(c, *order) : ordered_json(nullptr);
    print_json(doc);
  } else {
    auto deg = ideal.common_degree();
    std::cout << "dual ideal over " << n << " variables: "
              << ideal.generators.size() << " generators";
    if (deg) std::cout << " of degree " << *deg;
    std::cout << "\n" << faces_line(c, ideal.generators);
    std::cout << "alexander dual: " << dual.facets().size() << " facets\n";
    if (quotients)
      std::cout << "linear quotients: " << (order ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_betti(const Common& common, const std::string& input, int n,
              bool expect) {
  FieldSpec field = FieldSpec::parse(common.field);
  SimplicialComplex c = load(input);
  if (n < 0) n = c.num_vertices();
  SquarefreeIdeal ideal = dual_ideal(c, n);
  BettiTable table = betti_table(ideal, field, common.jobs);
  bool linear = has_linear_resolution(ideal, field, common.jobs);

  if (common.json) {
    ordered_json doc;
    doc["input"] = input;
    doc["field"] = field.name();
    doc["n"] = n;
    ordered_json rows = ordered_json::array();
    for (const auto& [key, value] : table.entries)
      rows.push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
    doc["betti"] = rows;
    doc["linear_resolution"] = linear;
    print_json(doc);
  } else {
    std::cout << "graded betti numbers of the dual ideal over " << field.name()
              << ":\n";
    for (const auto& [key, value] : table.entries)
      std::cout << "  beta_{" << key.first << "," << key.second
                << "} = " << value << "\n";
    std::cout << "linear resolution: " << (linear ? "yes" : "no") << "\n";
  }
  return verdict_exit(linear, expect);
}

int cmd_minimal_check(const Common& common, const std::string& input,
                      bool fast, bool expect) {
  FieldSpec field = FieldSpec::parse(common.field);
  SimplicialComplex c = load(input);
  MinimalityReport m = is_minimal_cm(c, field, fast, common.jobs);
  if (common.json) {
    ordered_json doc;
    doc["input"] = input;
    doc["field"] = field.name();
    doc["is_cm"] = m.is_cm;
    doc["is_minimal"] = m.is_minimal;
    doc["brute_forced"] = m.brute_forced;
    doc["removable_facets"] = faces_json(c, m.removable_facets);
    if (m.fast_path)
      doc["fast_path"] = {{"l", m.fast_path->l},
                          {"max_boundary_ridges", m.fast_path->max_boundary_ridges}};
    else
      doc["fast_path"] = nullptr;
    print_json(doc);
  } else {
    std::cout << "field:      " << field.name() << "\n"
              << "cm:         " << (m.is_cm ? "yes" : "no") << "\n"
              << "minimal cm: " << (m.is_minimal ? "yes" : "no") << "\n";
    if (m.fast_path)
      std::cout << "certified by the ridge criterion (l = " << m.fast_path->l
                << ")\n";
    if (m.brute_forced)
      std::cout << "removal sweep: " << m.removable_facets.size()
                << " removable facets\n"
                << faces_line(c, m.removable_facets);
  }
  return verdict_exit(m.is_minimal, expect);
}

int cmd_catalog_list(const Common& common) {
  if (common.json) {
    ordered_json doc = ordered_json::array();
    for (const auto& e : catalog::entries())
      doc.push_back({{"name", e.name}, {"description", e.description},
                     {"f_vector", e.f_vector}});
    for (const auto& name : catalog::reserved_names())
      doc.push_back({{"name", name}, {"description", "data not bundled"}});
    print_json(doc);
    return kExitOk;
  }
  for (const auto& e : catalog::entries())
    std::cout << e.name << "  " << e.description << "\n";
  std::cout << "simplex_<n>  full simplex on n vertices\n"
            << "boundary_simplex_<n>  boundary of the simplex on n vertices\n"
            << "skeleton_<n>_<i> (k_<n>_<i>)  i-skeleton of the simplex on n "
               "vertices\n";
  for (const auto& name : catalog::reserved_names())
    std::cout << name << "  (data not bundled; supply via MINCM_DATA_DIR)\n";
  return kExitOk;
}

int cmd_catalog_emit(const std::string& name) {
  std::cout << catalog::emit(name);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay and minimality analysis of simplicial complexes"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool with_field) {
    if (with_field)
      sub->add_option("--field", common.field, "q or gf<p> (default q)");
    sub->add_flag("--json", common.json, "structured output");
    sub->add_option("--jobs", common.jobs, "worker threads (0 = all cores)");
  };

  std::string input, base, expect_prop, out_dir = ".", emit_name;
  bool expect = false, no_sweep = false, brute = false, fast = false,
       quotients = false;
  int n = -1;
  std::size_t shelling_limit = 48;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report on one complex");
  analyze_cmd->add_option("input", input, "facet file or catalog:<name>")->required();
  analyze_cmd->add_option("--expect", expect_prop,
                          "exit 1 unless the property holds")
      ->check(CLI::IsMember({"cm", "minimal", "strongly-cm", "acyclic", "shellable"}));
  analyze_cmd->add_flag("--no-sweep", no_sweep, "skip the facet-removal sweep");
  analyze_cmd->add_option("--shelling-limit", shelling_limit,
                          "largest facet count for the shellability search");
  add_common(analyze_cmd, true);

  auto* reduce_cmd = app.add_subcommand(
      "reduce", "reduce a CM complex to a minimal CM one by shelling moves");
  reduce_cmd->add_option("input", input)->required();
  reduce_cmd->add_option("--out-dir", out_dir,
                         "directory for <stem>.minimal.txt and "
                         "<stem>.certificate.json");
  add_common(reduce_cmd, true);

  auto* shellable_cmd = app.add_subcommand("shellable", "search for a shelling");
  shellable_cmd->add_option("input", input)->required();
  shellable_cmd->add_flag("--expect", expect, "exit 1 when not shellable");
  add_common(shellable_cmd, false);

  auto* over_cmd = app.add_subcommand(
      "shelled-over", "search for shelling moves from a subcomplex");
  over_cmd->add_option("input", input)->required();
  over_cmd->add_option("base", base)->required();
  over_cmd->add_flag("--expect", expect, "exit 1 when no certificate exists");
  add_common(over_cmd, false);

  auto* dual_cmd = app.add_subcommand("dual", "Alexander dual and its ideal");
  dual_cmd->add_option("input", input)->required();
  dual_cmd->add_option("--n", n, "number of variables (default: vertex count)");
  dual_cmd->add_flag("--quotients", quotients, "search a linear-quotients order");
  add_common(dual_cmd, false);

  auto* betti_cmd = app.add_subcommand(
      "betti", "graded Betti numbers of the dual ideal (Hochster)");
  betti_cmd->add_option("input", input)->required();
  betti_cmd->add_option("--n", n, "number of variables (default: vertex count)");
  betti_cmd->add_flag("--expect", expect, "exit 1 without a linear resolution");
  add_common(betti_cmd, true);

  auto* minimal_cmd = app.add_subcommand("minimal-check", "minimal CM test");
  minimal_cmd->add_option("input", input)->required();
  auto* brute_flag = minimal_cmd->add_flag("--brute", brute,
                                           "always run the removal sweep");
  minimal_cmd->add_flag("--fast", fast, "accept the ridge certificate")
      ->excludes(brute_flag);
  minimal_cmd->add_flag("--expect", expect, "exit 1 when not minimal CM");
  add_common(minimal_cmd, true);

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in complexes");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
  list_cmd->add_flag("--json", common.json, "structured output");
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "print a facet file");
  emit_cmd->add_option("name", emit_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (common.jobs > 0) set_default_jobs(common.jobs);
    if (*analyze_cmd) return cmd_analyze(common, input, expect_prop, no_sweep, shelling_limit);
    if (*reduce_cmd) return cmd_reduce(common, input, out_dir);
    if (*shellable_cmd) return cmd_shellable(common, input, expect);
    if (*over_cmd) return cmd_shelled_over(common, input, base, expect);
    if (*dual_cmd) return cmd_dual(common, input, n, quotients);
    if (*betti_cmd) return cmd_betti(common, input, n, expect);
    if (*minimal_cmd) return cmd_minimal_check(common, input, fast, expect);
    if (*list_cmd) return cmd_catalog_list(common);
    if (*emit_cmd) return cmd_catalog_emit(emit_name);
  } catch (const ParseError& e) {
    // what() already carries "line L, column C".
    std::cerr << "mincm: " << input << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "mincm: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

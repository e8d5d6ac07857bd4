// Command-line front end: build lattice embeddings from arc presentations,
// evaluate length bounds, verify knots against presentations, and run the
// whole catalog with a CSV report.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "knotforge/arc_io.hpp"
#include "knotforge/bounds.hpp"
#include "knotforge/build.hpp"
#include "knotforge/catalog.hpp"
#include "knotforge/verify.hpp"

namespace {

using namespace knotforge;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

ProjectionOptions projection_options_from_env() {
  ProjectionOptions options;
  if (const char* retries = std::getenv("KNOTFORGE_EPSILON_RETRIES")) {
    options.retries = std::atoi(retries);
    if (options.retries < 0) options.retries = 0;
  }
  return options;
}

void print_budget(const LatticeKnot& knot) {
  const StickBudget b = stick_budget(knot);
  std::cout << "sticks x=" << b.x_sticks << " y=" << b.y_sticks << " z=" << b.z_sticks << "\n";
  std::cout << "edges x=" << b.x_edges << " y=" << b.y_edges << " z=" << b.z_edges
            << " total=" << b.total_edges() << "\n";
  const LevelReport levels = is_properly_leveled(knot);
  std::cout << "levels x=" << levels.level_count(Axis::X) << " y=" << levels.level_count(Axis::Y)
            << " z=" << levels.level_count(Axis::Z) << "\n";
  std::cout << "leveled " << (levels.properly_leveled ? "yes" : "no") << "\n";
}

int cmd_build(const std::string& input, const std::string& method, const std::string& out_json,
              const std::string& out_obj, const std::string& out_csv) {
  const PresentationFile file = parse_presentation(read_file(input));
  LatticeKnot knot;
  std::string tag;
  if (method == "basic") {
    knot = build_basic(file.presentation);
    tag = "basic";
  } else if (method == "reduced") {
    knot = reduce_ends(file.presentation);
    tag = "reduced";
  } else if (method == "lifted") {
    auto lifted = build_lifted(file.presentation);
    if (!lifted) {
      std::cerr << "error: lifted construction not applicable (no lift pair in the symmetry orbit)\n";
      return 1;
    }
    knot = std::move(lifted->knot);
    tag = "lifted";
  } else {  // auto
    ConstructionResult result = construct(file.presentation, file.meta);
    knot = std::move(result.knot);
    tag = build_method_name(result.method);
  }

  std::cout << "method " << tag << "\n";
  print_budget(knot);
  const EmbeddingReport rep = verify_embedding(knot);
  if (!rep.ok()) {
    for (const auto& failure : rep.failures) std::cerr << "error: " << failure << "\n";
    return 1;
  }
  if (!out_json.empty()) {
    write_file(out_json, knot_to_json(knot));
    std::cout << "wrote " << out_json << "\n";
  }
  if (!out_obj.empty()) {
    write_file(out_obj, knot_to_obj(knot));
    std::cout << "wrote " << out_obj << "\n";
  }
  if (!out_csv.empty()) {
    write_file(out_csv, knot_to_csv(knot));
    std::cout << "wrote " << out_csv << "\n";
  }
  return 0;
}

void print_report(const BoundReport& rep) {
  std::cout << "formula " << rep.formula_tag << "\n";
  std::cout << "inputs";
  for (const auto& [key, value] : rep.inputs) std::cout << " " << key << "=" << value;
  std::cout << "\n";
  std::cout << "theorem " << format_rational(rep.theorem_value) << "\n";
  std::cout << "exact " << rep.exact_value << "\n";
  if (!rep.note.empty()) std::cout << "note " << rep.note << "\n";
}

int cmd_bounds(std::optional<long long> crossings, const std::string& knot_class,
               std::optional<long long> torus_n, bool ropelength) {
  if (torus_n) {
    print_report(bound_torus(*torus_n));
    return 0;
  }
  if (!crossings) {
    std::cerr << "error: provide --crossings with --class, or --torus\n";
    return 1;
  }
  if (knot_class == "nonalt-prime") {
    print_report(bound_nonalt_prime(*crossings));
  } else {
    print_report(bound_general(*crossings));
  }
  if (ropelength) {
    const auto [quad, power] = ropelength_bounds(*crossings);
    std::cout << "ropelength quadratic " << format_rational(quad) << "\n";
    std::cout << "ropelength power32 " << format_rational(power) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& knot_path, const std::string& against,
               const std::string& dump_diagram) {
  const LatticeKnot knot = knot_from_json(read_file(knot_path));
  const PresentationFile file = parse_presentation(read_file(against));
  const VerifyReport rep = verify_knot_against(knot, file.presentation, projection_options_from_env());

  std::cout << "embedding " << (rep.embedding.ok() ? "pass" : "fail") << "\n";
  for (const auto& failure : rep.embedding.failures) std::cout << "  " << failure << "\n";
  if (rep.embedding.ok()) {
    std::cout << "leveled " << (rep.levels.properly_leveled ? "pass" : "fail") << " (x="
              << rep.levels.level_count(Axis::X) << " y=" << rep.levels.level_count(Axis::Y)
              << " z=" << rep.levels.level_count(Axis::Z) << ")\n";
    if (rep.projection_ok) {
      std::cout << "projection pass (crossings=" << rep.crossings
                << " attempts=" << rep.projection_attempts << ")\n";
      std::cout << "alexander " << (rep.alexander_match ? "match" : "mismatch") << " (knot: "
                << rep.alexander_knot.canonical().str() << ", presentation: "
                << rep.alexander_arcs.canonical().str() << ")\n";
      if (!dump_diagram.empty()) {
        write_file(dump_diagram, diagram_to_json(project(knot, projection_options_from_env()).diagram));
        std::cout << "wrote " << dump_diagram << "\n";
      }
    } else {
      std::cout << "projection fail (" << rep.projection_error << ")\n";
    }
  }
  std::cout << "result " << (rep.ok() ? "pass" : "fail") << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_catalog(const std::string& dir, const std::string& report_path) {
  std::vector<CatalogEntry> entries;
  try {
    entries = load_catalog(dir);
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const ProjectionOptions options = projection_options_from_env();
  std::ostringstream csv;
  csv << "name,method,x_sticks,y_sticks,z_sticks,edges,class_bound,minimal_length,alexander_ok\n";
  bool all_ok = true;
  for (const CatalogEntry& entry : entries) {
    try {
      const ConstructionResult result = construct(entry.presentation, entry.meta);
      const StickBudget budget = stick_budget(result.knot);
      const BoundReport bound = bound_for_meta(entry.meta, entry.presentation.arc_count());
      const VerifyReport verify = verify_knot_against(result.knot, entry.presentation, options);
      const bool alexander_ok =
          verify.ok() &&
          poly_equal_up_to_units(verify.alexander_knot, entry.reference_alexander);

      bool row_ok = alexander_ok && budget.total_edges() <= bound.exact_value;
      if (entry.known_minimal_length &&
          budget.total_edges() < *entry.known_minimal_length) {
        row_ok = false;  // shorter than a proven minimum: something is wrong
      }
      all_ok = all_ok && row_ok;

      std::cout << entry.meta.name << " " << build_method_name(result.method) << " sticks=("
                << budget.x_sticks << "," << budget.y_sticks << "," << budget.z_sticks
                << ") edges=" << budget.total_edges() << " bound=" << bound.exact_value;
      if (entry.known_minimal_length) std::cout << " min=" << *entry.known_minimal_length;
      std::cout << " alexander=" << (alexander_ok ? "ok" : "MISMATCH")
                << (row_ok ? "" : " FAIL") << "\n";

      csv << entry.meta.name << "," << build_method_name(result.method) << "," << budget.x_sticks
          << "," << budget.y_sticks << "," << budget.z_sticks << "," << budget.total_edges() << ","
          << bound.exact_value << ",";
      if (entry.known_minimal_length) csv << *entry.known_minimal_length;
      csv << "," << (alexander_ok ? 1 : 0) << "\n";
    } catch (const std::exception& e) {
      all_ok = false;
      std::cout << entry.meta.name << " FAIL (" << e.what() << ")\n";
      csv << entry.meta.name << ",error,,,,,,,0\n";
    }
  }
  if (!report_path.empty()) {
    write_file(report_path, csv.str());
    std::cout << "wrote " << report_path << "\n";
  }
  std::cout << "catalog " << (all_ok ? "ok" : "FAILED") << " (" << entries.size() << " entries)\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotforge: lattice embeddings of knots from arc presentations"};
  app.require_subcommand(1);

  // build
  std::string build_input, build_method = "auto", build_out, build_obj, build_csv;
  CLI::App* build = app.add_subcommand("build", "construct a lattice knot from a presentation");
  build->add_option("input", build_input, "arc-presentation JSON file")->required();
  build->add_option("--method", build_method, "auto|basic|reduced|lifted")
      ->check(CLI::IsMember({"auto", "basic", "reduced", "lifted"}));
  build->add_option("-o,--output", build_out, "write the lattice knot JSON here");
  build->add_option("--obj", build_obj, "write an OBJ polyline here");
  build->add_option("--csv", build_csv, "write a vertex CSV here");

  // bounds
  std::optional<long long> bounds_crossings;
  std::optional<long long> bounds_torus;
  std::string bounds_class = "general";
  bool bounds_ropelength = false;
  CLI::App* bounds = app.add_subcommand("bounds", "evaluate the length bound formulas");
  bounds->add_option("--crossings", bounds_crossings, "crossing number");
  bounds->add_option("--class", bounds_class, "general|nonalt-prime")
      ->check(CLI::IsMember({"general", "nonalt-prime"}));
  bounds->add_option("--torus", bounds_torus, "torus parameter n for the (n+1,n)-torus knot");
  bounds->add_flag("--ropelength", bounds_ropelength, "also print the ropelength bounds");

  // verify
  std::string verify_knot, verify_against, verify_dump;
  CLI::App* verify = app.add_subcommand("verify", "check a lattice knot against a presentation");
  verify->add_option("knot", verify_knot, "lattice knot JSON file")->required();
  verify->add_option("--against", verify_against, "arc-presentation JSON file")->required();
  verify->add_option("--dump-diagram", verify_dump, "write the projected diagram JSON here");

  // catalog
  std::string catalog_dir, catalog_report;
  CLI::App* catalog = app.add_subcommand("catalog", "build and verify every catalog entry");
  catalog->add_option("--dir", catalog_dir, "catalog directory")->required();
  catalog->add_option("--report", catalog_report, "write the run report CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      return cmd_build(build_input, build_method, build_out, build_obj, build_csv);
    }
    if (bounds->parsed()) {
      return cmd_bounds(bounds_crossings, bounds_class, bounds_torus, bounds_ropelength);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_knot, verify_against, verify_dump);
    }
    if (catalog->parsed()) {
      return cmd_catalog(catalog_dir, catalog_report);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

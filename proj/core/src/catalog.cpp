#include "knotforge/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "knotforge/arc_io.hpp"
#include "knotforge/bounds.hpp"
#include "knotforge/verify.hpp"

namespace knotforge {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& directory) {
  const std::filesystem::path manifest_path = directory / "manifest.json";
  if (!std::filesystem::exists(manifest_path)) {
    throw CatalogError("no entries: missing manifest " + manifest_path.string());
  }

  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogError("manifest.json: malformed JSON: " + std::string(e.what()));
  }
  if (!manifest.is_object() || !manifest.contains("entries") || !manifest["entries"].is_array()) {
    throw CatalogError("manifest.json: expected {\"entries\": [...]}");
  }

  std::vector<CatalogEntry> entries;
  for (const auto& item : manifest["entries"]) {
    if (!item.is_object() || !item.contains("file") || !item.contains("alexander")) {
      throw CatalogError("manifest.json: each entry needs \"file\" and \"alexander\"");
    }
    const std::string file = item["file"].get<std::string>();
    const auto fail = [&file](const std::string& check, const std::string& detail) -> CatalogError {
      return CatalogError(file + ": " + check + ": " + detail);
    };

    PresentationFile parsed = [&] {
      try {
        return parse_presentation(read_file(directory / file));
      } catch (const std::exception& e) {
        throw fail("parse", e.what());
      }
    }();

    std::map<int, long long> coeffs;
    for (const auto& [exp, coeff] : item["alexander"].items()) {
      coeffs[std::stoi(exp)] = coeff.get<long long>();
    }
    CatalogEntry entry{std::move(parsed.meta), std::move(parsed.presentation),
                       Laurent::from_coeffs(std::move(coeffs)), std::nullopt, file};
    if (item.contains("minimal_length")) {
      entry.known_minimal_length = item["minimal_length"].get<long long>();
    }

    const long long max_arcs = arc_index_upper(entry.meta);
    if (entry.presentation.arc_count() > max_arcs) {
      std::ostringstream os;
      os << entry.presentation.arc_count() << " arcs exceeds the class guarantee " << max_arcs;
      throw fail("arc-index", os.str());
    }
    const Laurent computed = alexander_from_arcs(entry.presentation);
    if (!poly_equal_up_to_units(computed, entry.reference_alexander)) {
      throw fail("alexander",
                 "presentation gives " + computed.canonical().str() + ", reference is " +
                     entry.reference_alexander.canonical().str());
    }
    entries.push_back(std::move(entry));
  }

  if (entries.empty()) throw CatalogError("no entries in " + directory.string());
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.meta.name < b.meta.name; });
  return entries;
}

}  // namespace knotforge

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotforge/arcs.hpp"
#include "knotforge/laurent.hpp"

namespace knotforge {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CatalogEntry {
  KnotMeta meta;
  ArcPresentation presentation;
  Laurent reference_alexander;
  std::optional<long long> known_minimal_length;
  std::string file;
};

/// Loads a catalog directory: a manifest.json listing presentation files
/// with reference Alexander polynomials and (optionally) known minimal
/// lengths. Every entry is certified on load: the presentation must be
/// valid, its arc count must not exceed the class's arc-index guarantee,
/// and its Alexander polynomial must match the reference up to units.
/// Failures name the file and the violated check. Entries return sorted
/// by name.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& directory);

}  // namespace knotforge

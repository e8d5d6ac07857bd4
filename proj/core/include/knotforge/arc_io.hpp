#pragma once

#include <stdexcept>
#include <string>

#include "knotforge/arcs.hpp"

namespace knotforge {

struct ParseError : std::runtime_error {
  ParseError(std::string field_path, const std::string& message)
      : std::runtime_error(field_path.empty() ? message : field_path + ": " + message),
        path(std::move(field_path)) {}
  std::string path;
};

struct PresentationFile {
  KnotMeta meta;
  ArcPresentation presentation;
};

/// Parses the arc-presentation JSON format. Unknown keys are rejected and
/// schema violations report the offending field path.
PresentationFile parse_presentation(const std::string& json_text);

/// Canonical serialization: fixed key order, arcs sorted by page, two-space
/// indent. parse/serialize round-trips up to whitespace.
std::string serialize_presentation(const PresentationFile& file);

}  // namespace knotforge

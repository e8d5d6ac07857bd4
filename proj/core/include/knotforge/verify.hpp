#pragma once

#include "knotforge/arcs.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/lattice.hpp"
#include "knotforge/laurent.hpp"
#include "knotforge/projection.hpp"

namespace knotforge {

/// Alexander polynomial straight from the presentation: arcs drawn as
/// horizontal segments at height = page over the binding axis, binding
/// indices as verticals joining their two arcs, verticals crossing over.
Laurent alexander_from_arcs(const ArcPresentation& ap);

/// Full knot-against-presentation check: geometry, leveledness, projection,
/// and Alexander agreement up to units.
struct VerifyReport {
  EmbeddingReport embedding;
  LevelReport levels;
  int crossings = 0;
  int projection_attempts = 0;
  bool projection_ok = false;
  std::string projection_error;
  Laurent alexander_knot;
  Laurent alexander_arcs;
  bool alexander_match = false;
  bool ok() const {
    return embedding.ok() && levels.properly_leveled && projection_ok && alexander_match;
  }
};

VerifyReport verify_knot_against(const LatticeKnot& knot, const ArcPresentation& ap,
                                 const ProjectionOptions& options = {});

}  // namespace knotforge

#pragma once

#include <string>
#include <vector>

#include "knotforge/laurent.hpp"

namespace knotforge {

/// A crossing of a knot diagram. Strand arcs (the pieces of the curve
/// between consecutive undercrossings) are labeled 0..m-1 in traversal
/// order; under_in ends at the crossing, under_out leaves it.
struct DiagramCrossing {
  int over_strand = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 0;  // +1 or -1
};

struct PlanarDiagram {
  int strand_count = 0;
  std::vector<DiagramCrossing> crossings;
};

/// One traversal of a crossing point, listed in walk order around the curve.
/// Directions are the sign pattern of the projected travel direction; only
/// the orientation of the (under, over) frame is consumed.
struct PassageEvent {
  int crossing = 0;  // pairing id; appears exactly twice, once over once under
  bool over = false;
  int dir_x = 0;  // in {-1, 0, 1}
  int dir_y = 0;
};

/// Assembles a diagram from the ordered passages of a single closed curve.
PlanarDiagram diagram_from_passages(const std::vector<PassageEvent>& walk);

/// Alexander polynomial from the crossing matrix: one row per crossing with
/// entries (1-t, t, -1) at (over, under_in, under_out) for positive crossings
/// and (t-1, 1, -t) for negative ones, accumulated when roles coincide; the
/// determinant of the minor dropping the last row and column, canonicalized.
/// The empty diagram gives 1. Throws std::invalid_argument unless the strand
/// succession forms a single cycle.
Laurent alexander_from_diagram(const PlanarDiagram& d);

/// Debug dump; not a stability-guaranteed format.
std::string diagram_to_json(const PlanarDiagram& d);

}  // namespace knotforge

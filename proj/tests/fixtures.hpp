#pragma once

#include <vector>

#include "knotforge/arcs.hpp"

namespace fixtures {

// Trefoil on five pages: the pentagram presentation.
inline knotforge::ArcPresentation trefoil_pentagram() {
  return knotforge::ArcPresentation::require_valid(
      {{1, 1, 3}, {2, 2, 4}, {3, 3, 5}, {4, 1, 4}, {5, 2, 5}});
}

inline knotforge::ArcPresentation two_arc_unknot() {
  return knotforge::ArcPresentation::require_valid({{1, 1, 2}, {2, 1, 2}});
}

inline knotforge::ArcPresentation four_arc_unknot() {
  return knotforge::ArcPresentation::require_valid({{1, 1, 2}, {2, 2, 3}, {3, 3, 4}, {4, 1, 4}});
}

inline knotforge::KnotMeta trefoil_meta() {
  return {"3_1", 3, {knotforge::KnotClassKind::general, 0}};
}

}  // namespace fixtures

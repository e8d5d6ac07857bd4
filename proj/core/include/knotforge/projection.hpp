#pragma once

#include <stdexcept>
#include <string>

#include "knotforge/diagram.hpp"
#include "knotforge/lattice.hpp"

namespace knotforge {

/// A projection attempt hit a non-generic configuration (triple point,
/// endpoint-on-interior incidence, or collinear overlap). Carries the
/// offending stick pair; retrying with a halved shear usually resolves it.
struct GenericityError : std::runtime_error {
  GenericityError(int a, int b, const std::string& what)
      : std::runtime_error("projection genericity failure between sticks " + std::to_string(a) +
                           " and " + std::to_string(b) + ": " + what),
        stick_a(a),
        stick_b(b) {}
  int stick_a;
  int stick_b;
};

struct ProjectionOptions {
  int retries = 8;  // additional attempts with the shear halved each time
};

struct Projected {
  PlanarDiagram diagram;
  int attempts = 1;  // 1 means the default shear was already generic
};

/// Single projection attempt under the shear (x, y, z) -> (x + eps z,
/// y + eps^2 z) with eps = 1 / (4 (L+1)^2 2^halvings), L the largest
/// coordinate magnitude. All intersection tests are exact rational; over and
/// under are decided by the exact z value at each crossing. Requires a knot
/// that passes verify_embedding. Throws GenericityError.
PlanarDiagram project_once(const LatticeKnot& knot, int halvings = 0);

/// project_once with the retry policy applied; throws std::runtime_error
/// after the retry budget is exhausted.
Projected project(const LatticeKnot& knot, const ProjectionOptions& options = {});

}  // namespace knotforge

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "knotforge/arcs.hpp"
#include "knotforge/lattice.hpp"

namespace knotforge {

/// Raised when a construction produces geometry that fails verification.
/// The constructions are collision-free for valid input; this is the guard.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Realizes each arc as an x-stick plus y-stick in its page's z-plane and
/// joins arcs sharing a binding index with z-sticks. The output has exactly
/// n sticks per axis, is properly leveled, and passes verification.
LatticeKnot build_basic(const ArcPresentation& ap);

/// build_basic followed by the two end reductions: the surplus x-stick on
/// the bottom y-level and the surplus y-stick on the top x-level are removed,
/// rerouting their z-sticks. Budget (n-1, n-1, n). Requires n >= 4.
LatticeKnot reduce_ends(const ArcPresentation& ap);

enum class BuildMethod { basic, reduced, lifted };

constexpr const char* build_method_name(BuildMethod m) {
  switch (m) {
    case BuildMethod::basic: return "basic";
    case BuildMethod::reduced: return "reduced";
    case BuildMethod::lifted: return "lifted";
  }
  return "?";
}

struct LiftedBuild {
  LatticeKnot knot;
  LiftPair pair;  // the relabeled presentation actually built
};

/// The four-stick reduction: when find_lift_pair succeeds, the page-1 arc is
/// placed mirrored above the diagonal, raised to its anchor arc's level, and
/// its x-stick merged with the anchor's. Budget (n-2, n-1, n-1). Returns
/// nothing when no lift pair exists. Requires n >= 4 for applicability.
std::optional<LiftedBuild> build_lifted(const ArcPresentation& ap);

struct ConstructionResult {
  LatticeKnot knot;
  BuildMethod method = BuildMethod::basic;
  KnotMeta meta;
};

/// Dispatch: lifted when a lift pair exists, otherwise the end-reduced build;
/// presentations with fewer than 4 arcs fall back to the basic build.
ConstructionResult construct(const ArcPresentation& ap, const KnotMeta& meta);

}  // namespace knotforge

#include "knotforge/build.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace knotforge {

namespace {

struct ArcPath {
  Vec3 lo_end, mid, hi_end;  // oriented from the lo binding to the hi binding
};

// Standard placement: x-stick at y = lo, then y-stick at x = hi, below the
// diagonal. The mirrored placement swaps the roles (used for the lifted arc).
ArcPath arc_path(const Arc& a, int z, bool mirrored) {
  if (!mirrored) return {{a.lo, a.lo, z}, {a.hi, a.lo, z}, {a.hi, a.hi, z}};
  return {{a.lo, a.lo, z}, {a.lo, a.hi, z}, {a.hi, a.hi, z}};
}

// Full corner walk around the cycle. `mirror_page` (0 = none) names the arc
// drawn above the diagonal, at z-level `mirror_z` instead of its own page.
std::vector<Vec3> walk_vertices(const ArcPresentation& ap, int mirror_page, int mirror_z) {
  std::vector<Vec3> walk;
  walk.reserve(static_cast<size_t>(3 * ap.arc_count()));
  for (const auto& [arc_idx, enter] : trace_cycle(ap)) {
    const Arc& a = ap.arcs()[static_cast<size_t>(arc_idx)];
    const bool mirrored = a.page == mirror_page;
    const ArcPath p = arc_path(a, mirrored ? mirror_z : a.page, mirrored);
    if (enter == a.lo) {
      walk.push_back(p.lo_end);
      walk.push_back(p.mid);
      walk.push_back(p.hi_end);
    } else {
      walk.push_back(p.hi_end);
      walk.push_back(p.mid);
      walk.push_back(p.lo_end);
    }
  }
  return walk;
}

// Replaces the cyclically adjacent pair (z1, z2), in either orientation,
// with the single corner `mid`.
void splice_z(std::vector<Vec3>& walk, const Vec3& z1, const Vec3& z2, const Vec3& mid) {
  const size_t n = walk.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec3& a = walk[i];
    const Vec3& b = walk[(i + 1) % n];
    if ((a == z1 && b == z2) || (a == z2 && b == z1)) {
      if (i + 1 < n) {
        walk[i] = mid;
        walk.erase(walk.begin() + static_cast<long>(i) + 1);
      } else {
        walk[i] = mid;
        walk.erase(walk.begin());
      }
      return;
    }
  }
  throw ConstructionError("end reduction: expected z-stick not found in walk");
}

// The two end reductions from the basic build: on the bottom y-level drop the
// x-stick of the arc with the smaller upper binding, on the top x-level drop
// the y-stick of the arc with the larger lower binding, rerouting the
// adjacent z-stick each time.
void apply_end_reductions(std::vector<Vec3>& walk, const ArcPresentation& ap) {
  const int n = ap.arc_count();

  {
    const auto [i0, i1] = ap.arcs_at_binding(1);
    Arc a = ap.arcs()[static_cast<size_t>(i0)];
    Arc b = ap.arcs()[static_cast<size_t>(i1)];
    if (a.hi > b.hi) std::swap(a, b);  // a: deleted x-stick, b: shortened
    splice_z(walk, {1, 1, a.page}, {1, 1, b.page}, {a.hi, 1, b.page});
  }
  {
    const auto [i0, i1] = ap.arcs_at_binding(n);
    Arc c = ap.arcs()[static_cast<size_t>(i0)];
    Arc d = ap.arcs()[static_cast<size_t>(i1)];
    if (c.lo < d.lo) std::swap(c, d);  // c: deleted y-stick, d: shortened
    splice_z(walk, {n, n, c.page}, {n, n, d.page}, {n, c.lo, d.page});
  }
}

LatticeKnot finish(std::vector<Vec3> walk, const char* what) {
  LatticeKnot knot{compact_levels(normalize_corners(std::move(walk)))};
  const EmbeddingReport rep = verify_embedding(knot);
  if (!rep.ok()) {
    std::ostringstream os;
    os << what << ": construction failed verification:";
    for (const auto& f : rep.failures) os << " " << f << ";";
    throw ConstructionError(os.str());
  }
  return knot;
}

}  // namespace

LatticeKnot build_basic(const ArcPresentation& ap) {
  return finish(walk_vertices(ap, 0, 0), "build_basic");
}

LatticeKnot reduce_ends(const ArcPresentation& ap) {
  if (ap.arc_count() < 4) {
    throw std::invalid_argument("reduce_ends requires at least 4 arcs");
  }
  std::vector<Vec3> walk = walk_vertices(ap, 0, 0);
  apply_end_reductions(walk, ap);
  return finish(std::move(walk), "reduce_ends");
}

std::optional<LiftedBuild> build_lifted(const ArcPresentation& ap) {
  auto pair = find_lift_pair(ap);
  if (!pair) return std::nullopt;
  const ArcPresentation& member = pair->relabeled;
  const int lift_level = pair->anchor_arc.page;

  // The lifted arc sits above the diagonal at the anchor's z-level. Its
  // z-stick at the shared binding degenerates to a point and the two
  // collinear x-sticks merge; both fall out of corner normalization.
  std::vector<Vec3> walk = walk_vertices(member, /*mirror_page=*/1, lift_level);
  walk = normalize_corners(std::move(walk));
  apply_end_reductions(walk, member);
  LatticeKnot knot = finish(std::move(walk), "build_lifted");
  return LiftedBuild{std::move(knot), std::move(*pair)};
}

ConstructionResult construct(const ArcPresentation& ap, const KnotMeta& meta) {
  if (ap.arc_count() < 4) {
    return {build_basic(ap), BuildMethod::basic, meta};
  }
  if (auto lifted = build_lifted(ap)) {
    return {std::move(lifted->knot), BuildMethod::lifted, meta};
  }
  return {reduce_ends(ap), BuildMethod::reduced, meta};
}

}  // namespace knotforge

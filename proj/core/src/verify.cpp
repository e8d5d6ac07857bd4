#include "knotforge/verify.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace knotforge {

Laurent alexander_from_arcs(const ArcPresentation& ap) {
  const int n = ap.arc_count();

  // Height span of the vertical segment at each binding index.
  std::vector<std::pair<int, int>> vert(static_cast<size_t>(n + 1));
  for (int m = 1; m <= n; ++m) {
    const auto [i, j] = ap.arcs_at_binding(m);
    const int p = ap.arcs()[static_cast<size_t>(i)].page;
    const int q = ap.arcs()[static_cast<size_t>(j)].page;
    vert[static_cast<size_t>(m)] = {std::min(p, q), std::max(p, q)};
  }

  // A crossing wherever a vertical passes strictly through an arc's height
  // while the arc passes strictly through the vertical's binding.
  std::map<std::pair<int, int>, int> crossing_ids;  // (binding, page) -> id
  auto crossing_at = [&](int binding, int page) -> int* {
    const Arc& arc = ap.arc_on_page(page);
    const auto [plo, phi] = vert[static_cast<size_t>(binding)];
    if (arc.lo < binding && binding < arc.hi && plo < page && page < phi) {
      auto [it, inserted] = crossing_ids.try_emplace({binding, page},
                                                     static_cast<int>(crossing_ids.size()));
      (void)inserted;
      return &it->second;
    }
    return nullptr;
  };

  std::vector<PassageEvent> walk;
  for (const auto& [arc_idx, enter] : trace_cycle(ap)) {
    const Arc& a = ap.arcs()[static_cast<size_t>(arc_idx)];
    const int exit = (enter == a.lo) ? a.hi : a.lo;
    const int step = exit > enter ? 1 : -1;
    // Horizontal run at height a.page: every crossing here is an underpass.
    for (int m = enter + step; m != exit; m += step) {
      if (int* id = crossing_at(m, a.page)) {
        walk.push_back({*id, false, step, 0});
      }
    }
    // Vertical run at the exit binding, from this page to the next arc's.
    const auto [other0, other1] = ap.arcs_at_binding(exit);
    const int other = (ap.arcs()[static_cast<size_t>(other0)].page == a.page)
                          ? ap.arcs()[static_cast<size_t>(other1)].page
                          : ap.arcs()[static_cast<size_t>(other0)].page;
    const int vstep = other > a.page ? 1 : -1;
    for (int p = a.page + vstep; p != other; p += vstep) {
      if (int* id = crossing_at(exit, p)) {
        walk.push_back({*id, true, 0, vstep});
      }
    }
  }
  return alexander_from_diagram(diagram_from_passages(walk));
}

VerifyReport verify_knot_against(const LatticeKnot& knot, const ArcPresentation& ap,
                                 const ProjectionOptions& options) {
  VerifyReport rep;
  rep.embedding = verify_embedding(knot);
  if (!rep.embedding.ok()) return rep;
  rep.levels = is_properly_leveled(knot);
  try {
    const Projected proj = project(knot, options);
    rep.projection_ok = true;
    rep.projection_attempts = proj.attempts;
    rep.crossings = static_cast<int>(proj.diagram.crossings.size());
    rep.alexander_knot = alexander_from_diagram(proj.diagram);
  } catch (const std::exception& e) {
    rep.projection_error = e.what();
    return rep;
  }
  rep.alexander_arcs = alexander_from_arcs(ap);
  rep.alexander_match = poly_equal_up_to_units(rep.alexander_knot, rep.alexander_arcs);
  return rep;
}

}  // namespace knotforge

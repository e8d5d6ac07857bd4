#include "knotforge/arcs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotforge {

namespace {

// Walks the arc/binding incidence cycle starting from arc `start`. Returns
// the steps taken; stops early if the structure is inconsistent.
std::vector<std::pair<int, int>> walk_from(const std::vector<Arc>& arcs,
                                           const std::map<int, std::vector<int>>& at_binding,
                                           int start) {
  std::vector<std::pair<int, int>> steps;
  const int n = static_cast<int>(arcs.size());
  int arc = start;
  int enter = arcs[static_cast<size_t>(start)].lo;
  for (int i = 0; i < n; ++i) {
    steps.emplace_back(arc, enter);
    const Arc& a = arcs[static_cast<size_t>(arc)];
    const int exit = (enter == a.lo) ? a.hi : a.lo;
    const auto& pair = at_binding.at(exit);
    const int next = (pair[0] == arc) ? pair[1] : pair[0];
    arc = next;
    enter = exit;
    if (arc == start && enter == arcs[static_cast<size_t>(start)].lo) break;
  }
  return steps;
}

}  // namespace

std::vector<ValidationIssue> check_arcs(const std::vector<Arc>& raw) {
  std::vector<ValidationIssue> issues;
  const int n = static_cast<int>(raw.size());
  if (n < 2) {
    issues.push_back({"arc-count", -1, "a presentation needs at least 2 arcs"});
    return issues;
  }

  std::map<int, int> page_count;
  for (int i = 0; i < n; ++i) {
    const Arc& a = raw[static_cast<size_t>(i)];
    if (a.page < 1 || a.page > n) {
      std::ostringstream os;
      os << "page " << a.page << " outside 1.." << n;
      issues.push_back({"page", i, os.str()});
    } else {
      ++page_count[a.page];
    }
    if (a.lo >= a.hi) {
      std::ostringstream os;
      os << "binding pair (" << a.lo << ", " << a.hi << ") must satisfy lo < hi";
      issues.push_back({"binding-order", i, os.str()});
    }
    for (int b : {a.lo, a.hi}) {
      if (b < 1 || b > n) {
        std::ostringstream os;
        os << "binding index " << b << " outside 1.." << n;
        issues.push_back({"binding-range", i, os.str()});
      }
    }
  }
  for (const auto& [page, count] : page_count) {
    if (count > 1) {
      std::ostringstream os;
      os << "page " << page << " used by " << count << " arcs";
      issues.push_back({"page", page, os.str()});
    }
  }
  if (page_count.size() != static_cast<size_t>(n) && issues.empty()) {
    issues.push_back({"page", -1, "pages do not cover 1..n"});
  }

  std::map<int, int> binding_count;
  for (const Arc& a : raw) {
    if (a.lo >= 1 && a.lo <= n) ++binding_count[a.lo];
    if (a.hi >= 1 && a.hi <= n && a.hi != a.lo) ++binding_count[a.hi];
  }
  bool counts_ok = true;
  for (int b = 1; b <= n; ++b) {
    const int c = binding_count.count(b) ? binding_count[b] : 0;
    if (c != 2) {
      counts_ok = false;
      std::ostringstream os;
      os << "binding index " << b << " occurs in " << c << " arcs, expected 2";
      issues.push_back({"binding-count", b, os.str()});
    }
  }

  if (issues.empty() && counts_ok) {
    std::map<int, std::vector<int>> at_binding;
    for (int i = 0; i < n; ++i) {
      at_binding[raw[static_cast<size_t>(i)].lo].push_back(i);
      at_binding[raw[static_cast<size_t>(i)].hi].push_back(i);
    }
    const auto steps = walk_from(raw, at_binding, 0);
    if (static_cast<int>(steps.size()) != n) {
      std::ostringstream os;
      os << "arcs split into multiple cycles (first cycle has " << steps.size() << " of " << n
         << " arcs)";
      issues.push_back({"cycle", -1, os.str()});
    }
  }
  return issues;
}

ArcPresentation::ValidationResult ArcPresentation::validate(std::vector<Arc> arcs) {
  auto issues = check_arcs(arcs);
  if (!issues.empty()) return issues;
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.page < b.page; });
  return ArcPresentation(std::move(arcs));
}

ArcPresentation ArcPresentation::require_valid(std::vector<Arc> arcs) {
  auto result = validate(std::move(arcs));
  if (auto* ap = std::get_if<ArcPresentation>(&result)) return std::move(*ap);
  std::ostringstream os;
  os << "invalid arc presentation:";
  for (const auto& issue : std::get<std::vector<ValidationIssue>>(result)) {
    os << " [" << issue.rule << "] " << issue.detail << ";";
  }
  throw std::invalid_argument(os.str());
}

std::array<int, 2> ArcPresentation::arcs_at_binding(int binding) const {
  std::array<int, 2> out{-1, -1};
  int found = 0;
  for (int i = 0; i < arc_count(); ++i) {
    const Arc& a = arcs_[static_cast<size_t>(i)];
    if (a.lo == binding || a.hi == binding) {
      out[static_cast<size_t>(found++)] = i;
      if (found == 2) break;
    }
  }
  if (found != 2) throw std::logic_error("arcs_at_binding: binding not shared by two arcs");
  return out;
}

ArcPresentation dual(const ArcPresentation& ap) {
  const int n = ap.arc_count();
  std::vector<Arc> out;
  out.reserve(static_cast<size_t>(n));
  for (int m = 1; m <= n; ++m) {
    const auto [i, j] = ap.arcs_at_binding(m);
    const int p = ap.arcs()[static_cast<size_t>(i)].page;
    const int q = ap.arcs()[static_cast<size_t>(j)].page;
    out.push_back({m, std::min(p, q), std::max(p, q)});
  }
  return ArcPresentation::require_valid(std::move(out));
}

ArcPresentation rotate_pages(const ArcPresentation& ap, int shift) {
  const int n = ap.arc_count();
  std::vector<Arc> out = ap.arcs();
  for (Arc& a : out) a.page = (a.page - 1 + shift) % n + 1;
  return ArcPresentation::require_valid(std::move(out));
}

ArcPresentation reverse_pages(const ArcPresentation& ap) {
  const int n = ap.arc_count();
  std::vector<Arc> out = ap.arcs();
  for (Arc& a : out) a.page = n + 1 - a.page;
  return ArcPresentation::require_valid(std::move(out));
}

ArcPresentation reverse_bindings(const ArcPresentation& ap) {
  const int n = ap.arc_count();
  std::vector<Arc> out = ap.arcs();
  for (Arc& a : out) {
    const int lo = n + 1 - a.hi;
    const int hi = n + 1 - a.lo;
    a.lo = lo;
    a.hi = hi;
  }
  return ArcPresentation::require_valid(std::move(out));
}

std::vector<ArcPresentation> symmetry_orbit(const ArcPresentation& ap) {
  std::set<ArcPresentation> seen;
  const int n = ap.arc_count();
  for (int c = 0; c < n; ++c) {
    const ArcPresentation rotated = rotate_pages(ap, c);
    for (int rev_p = 0; rev_p < 2; ++rev_p) {
      const ArcPresentation p1 = rev_p ? reverse_pages(rotated) : rotated;
      for (int rev_b = 0; rev_b < 2; ++rev_b) {
        const ArcPresentation p2 = rev_b ? reverse_bindings(p1) : p1;
        seen.insert(p2);
        seen.insert(dual(p2));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<LiftPair> find_lift_pair(const ArcPresentation& ap) {
  const int n = ap.arc_count();
  if (n < 4) return std::nullopt;
  for (const ArcPresentation& member : symmetry_orbit(ap)) {
    const Arc& l = member.arc_on_page(1);
    if (l.lo <= 1 || l.hi >= n) continue;
    for (const Arc& other : member.arcs()) {
      if (other.lo == l.hi && other.hi == n) {
        return LiftPair{member, l, other};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> trace_cycle(const ArcPresentation& ap) {
  std::map<int, std::vector<int>> at_binding;
  for (int i = 0; i < ap.arc_count(); ++i) {
    at_binding[ap.arcs()[static_cast<size_t>(i)].lo].push_back(i);
    at_binding[ap.arcs()[static_cast<size_t>(i)].hi].push_back(i);
  }
  return walk_from(ap.arcs(), at_binding, 0);
}

}  // namespace knotforge

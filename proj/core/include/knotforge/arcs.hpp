#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace knotforge {

/// One arc of an arc presentation: the page it lives on (numbered back to
/// front) and the pair of binding indices it spans on the axis.
struct Arc {
  int page = 0;
  int lo = 0;
  int hi = 0;
  auto operator<=>(const Arc&) const = default;
};

enum class KnotClassKind { general, nonalternating_prime, torus };

struct KnotClass {
  KnotClassKind kind = KnotClassKind::general;
  int torus_n = 0;  // meaningful only for kind == torus
  auto operator<=>(const KnotClass&) const = default;
};

struct KnotMeta {
  std::string name;
  long long crossing_number = 0;
  KnotClass knot_class;
};

struct ValidationIssue {
  std::string rule;  // "arc-count", "page", "binding-range", "binding-order", "binding-count", "cycle"
  int index = -1;    // arc position or binding index, -1 when not applicable
  std::string detail;
};

/// A validated arc presentation. Arcs are stored sorted by page, which is the
/// canonical form used for equality and orbit deduplication.
class ArcPresentation {
public:
  using ValidationResult = std::variant<ArcPresentation, std::vector<ValidationIssue>>;

  /// Checks the three presentation invariants (pages are 1..n exactly, every
  /// binding index appears in exactly two arcs, the arcs close into a single
  /// cycle) and returns either the presentation or the list of violations.
  static ValidationResult validate(std::vector<Arc> arcs);

  /// validate() that throws std::invalid_argument listing the violations.
  static ArcPresentation require_valid(std::vector<Arc> arcs);

  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc_on_page(int page) const { return arcs_[static_cast<size_t>(page - 1)]; }
  /// The two arcs meeting a binding index, as indices into arcs().
  std::array<int, 2> arcs_at_binding(int binding) const;

  auto operator<=>(const ArcPresentation&) const = default;

private:
  explicit ArcPresentation(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {}
  std::vector<Arc> arcs_;
};

std::vector<ValidationIssue> check_arcs(const std::vector<Arc>& raw);

/// Exchange the roles of pages and binding indices: the dual arc for binding
/// m spans the pages of the two arcs that met at m. An exact involution.
ArcPresentation dual(const ArcPresentation& ap);

ArcPresentation rotate_pages(const ArcPresentation& ap, int shift);
ArcPresentation reverse_pages(const ArcPresentation& ap);
ArcPresentation reverse_bindings(const ArcPresentation& ap);

/// All presentations reachable by cyclic page rotation, page reversal,
/// binding reversal, and the dual of each (at most 8n members), deduplicated
/// and sorted. Always contains ap itself.
std::vector<ArcPresentation> symmetry_orbit(const ArcPresentation& ap);

/// The relabeled presentation, its page-1 arc, and the anchor arc that make
/// the lifted construction applicable.
struct LiftPair {
  ArcPresentation relabeled;
  Arc lift_arc;    // page 1, bindings (a, b) with 1 < a < b < n
  Arc anchor_arc;  // bindings (b, n)
};

/// Searches the symmetry orbit for a member whose page-1 arc spans (a, b)
/// with 1 < a < b < n while some other arc spans (b, n). Returns the first
/// such member in canonical orbit order, or nothing; absence is a normal
/// outcome, expected for (n+1,n)-torus presentations.
std::optional<LiftPair> find_lift_pair(const ArcPresentation& ap);

/// The knot walk: (arc index, binding entered through) for each of the n
/// steps around the single cycle.
std::vector<std::pair<int, int>> trace_cycle(const ArcPresentation& ap);

}  // namespace knotforge

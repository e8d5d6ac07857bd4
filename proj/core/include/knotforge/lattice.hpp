#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace knotforge {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

constexpr const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

struct Vec3 {
  int x = 0;
  int y = 0;
  int z = 0;
  auto operator<=>(const Vec3&) const = default;
  int operator[](Axis a) const {
    switch (a) {
      case Axis::X: return x;
      case Axis::Y: return y;
      case Axis::Z: return z;
    }
    return 0;
  }
};

/// A maximal axis-parallel segment. The two fixed coordinates are stored in
/// axis-cyclic order: an x-stick fixes (y, z), a y-stick (z, x), a z-stick
/// (x, y). The varying coordinate runs over [lo, hi].
struct LatticeStick {
  Axis axis = Axis::X;
  int fixed_a = 0;
  int fixed_b = 0;
  int lo = 0;
  int hi = 0;
  int length() const { return hi - lo; }
  auto operator<=>(const LatticeStick&) const = default;
};

/// A closed orthogonal polygon in the integer lattice, stored as its cyclic
/// corner list (the last vertex connects back to the first).
struct LatticeKnot {
  std::vector<Vec3> vertices;

  /// Derived stick list, one per consecutive corner pair. Requires the
  /// vertex list to be axis-aligned (each consecutive pair differs in
  /// exactly one coordinate); throws std::logic_error otherwise.
  std::vector<LatticeStick> sticks() const;
};

struct StickBudget {
  long long x_sticks = 0, y_sticks = 0, z_sticks = 0;
  long long x_edges = 0, y_edges = 0, z_edges = 0;
  long long total_sticks() const { return x_sticks + y_sticks + z_sticks; }
  long long total_edges() const { return x_edges + y_edges + z_edges; }
  bool operator==(const StickBudget&) const = default;
};

StickBudget stick_budget(const LatticeKnot& knot);

/// Geometric verification report. All checks use exact integer tests.
struct EmbeddingReport {
  bool closed = false;               // enough corners to close a polygon
  bool axis_aligned = false;         // consecutive corners differ in one coordinate
  bool transversal_corners = false;  // consecutive sticks change axis
  bool edges_distinct = false;       // no unit edge is traversed twice
  bool sticks_disjoint = false;      // sticks meet only at shared corners
  std::vector<std::string> failures;
  bool ok() const {
    return closed && axis_aligned && transversal_corners && edges_distinct && sticks_disjoint;
  }
};

EmbeddingReport verify_embedding(const LatticeKnot& knot);

/// Per-axis level bookkeeping: a level of an axis is a coordinate value
/// carrying at least one endpoint of that axis's sticks. Properly leveled
/// means every axis has sticks and every level carries exactly two endpoints.
struct LevelReport {
  bool properly_leveled = false;
  std::array<std::map<int, int>, 3> endpoint_counts;  // level -> endpoint count, per axis
  std::array<long long, 3> stick_counts{0, 0, 0};
  long long level_count(Axis a) const {
    return static_cast<long long>(endpoint_counts[static_cast<size_t>(a)].size());
  }
};

LevelReport is_properly_leveled(const LatticeKnot& knot);

/// Removes zero-length moves and merges collinear adjacent sticks, cyclically,
/// until every corner is transversal.
std::vector<Vec3> normalize_corners(std::vector<Vec3> vertices);

/// Deletes lattice planes containing no corner and translates so every axis
/// starts at coordinate 1. An ambient isotopy; stick counts are unchanged and
/// stick lengths only shrink.
std::vector<Vec3> compact_levels(std::vector<Vec3> vertices);

LatticeKnot knot_from_json(const std::string& json_text);
std::string knot_to_json(const LatticeKnot& knot);
std::string knot_to_obj(const LatticeKnot& knot);
std::string knot_to_csv(const LatticeKnot& knot);

}  // namespace knotforge

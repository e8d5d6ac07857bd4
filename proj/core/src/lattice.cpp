#include "knotforge/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace knotforge {

namespace {

int diff_count(const Vec3& a, const Vec3& b) {
  return (a.x != b.x) + (a.y != b.y) + (a.z != b.z);
}

Axis segment_axis(const Vec3& a, const Vec3& b) {
  if (a.x != b.x) return Axis::X;
  if (a.y != b.y) return Axis::Y;
  return Axis::Z;
}

LatticeStick make_stick(const Vec3& a, const Vec3& b) {
  const Axis axis = segment_axis(a, b);
  LatticeStick s;
  s.axis = axis;
  switch (axis) {
    case Axis::X:
      s.fixed_a = a.y;
      s.fixed_b = a.z;
      s.lo = std::min(a.x, b.x);
      s.hi = std::max(a.x, b.x);
      break;
    case Axis::Y:
      s.fixed_a = a.z;
      s.fixed_b = a.x;
      s.lo = std::min(a.y, b.y);
      s.hi = std::max(a.y, b.y);
      break;
    case Axis::Z:
      s.fixed_a = a.x;
      s.fixed_b = a.y;
      s.lo = std::min(a.z, b.z);
      s.hi = std::max(a.z, b.z);
      break;
  }
  return s;
}

// Coordinate ranges of a stick, per axis, as closed intervals.
struct Box {
  std::array<std::array<int, 2>, 3> range;
};

Box stick_box(const LatticeStick& s) {
  Box b;
  const auto var = static_cast<size_t>(s.axis);
  const auto fa = (var + 1) % 3;
  const auto fb = (var + 2) % 3;
  b.range[var] = {s.lo, s.hi};
  b.range[fa] = {s.fixed_a, s.fixed_a};
  b.range[fb] = {s.fixed_b, s.fixed_b};
  return b;
}

// Intersection of two stick boxes; empty() when they are disjoint.
struct Overlap {
  std::array<std::array<int, 2>, 3> range;
  bool empty = false;
  bool single_point() const {
    if (empty) return false;
    for (const auto& r : range) {
      if (r[0] != r[1]) return false;
    }
    return true;
  }
  Vec3 point() const { return {range[0][0], range[1][0], range[2][0]}; }
};

Overlap intersect(const Box& a, const Box& b) {
  Overlap o;
  for (size_t i = 0; i < 3; ++i) {
    o.range[i] = {std::max(a.range[i][0], b.range[i][0]), std::min(a.range[i][1], b.range[i][1])};
    if (o.range[i][0] > o.range[i][1]) o.empty = true;
  }
  return o;
}

std::string vec_str(const Vec3& v) {
  std::ostringstream os;
  os << "(" << v.x << "," << v.y << "," << v.z << ")";
  return os.str();
}

}  // namespace

std::vector<LatticeStick> LatticeKnot::sticks() const {
  std::vector<LatticeStick> out;
  const size_t n = vertices.size();
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const Vec3& a = vertices[i];
    const Vec3& b = vertices[(i + 1) % n];
    if (diff_count(a, b) != 1) {
      throw std::logic_error("sticks(): vertex list is not axis-aligned at index " +
                             std::to_string(i));
    }
    out.push_back(make_stick(a, b));
  }
  return out;
}

StickBudget stick_budget(const LatticeKnot& knot) {
  StickBudget b;
  for (const LatticeStick& s : knot.sticks()) {
    switch (s.axis) {
      case Axis::X:
        ++b.x_sticks;
        b.x_edges += s.length();
        break;
      case Axis::Y:
        ++b.y_sticks;
        b.y_edges += s.length();
        break;
      case Axis::Z:
        ++b.z_sticks;
        b.z_edges += s.length();
        break;
    }
  }
  return b;
}

EmbeddingReport verify_embedding(const LatticeKnot& knot) {
  EmbeddingReport rep;
  const auto& vs = knot.vertices;
  const size_t n = vs.size();

  rep.closed = n >= 4;
  if (!rep.closed) rep.failures.push_back("closure: fewer than 4 corners");

  rep.axis_aligned = n > 0;
  for (size_t i = 0; i < n; ++i) {
    const int d = diff_count(vs[i], vs[(i + 1) % n]);
    if (d != 1) {
      rep.axis_aligned = false;
      std::ostringstream os;
      os << "axis-alignment: corners " << i << " and " << (i + 1) % n << " differ in " << d
         << " coordinates";
      rep.failures.push_back(os.str());
    }
  }

  // Repeated corners are a self-intersection regardless of anything else.
  bool repeated = false;
  {
    std::set<Vec3> seen;
    for (const Vec3& v : vs) {
      if (!seen.insert(v).second) {
        repeated = true;
        rep.failures.push_back("self-avoidance: corner " + vec_str(v) + " repeats");
      }
    }
  }

  if (!rep.axis_aligned) {
    rep.transversal_corners = false;
    rep.edges_distinct = false;
    rep.sticks_disjoint = false;
    rep.failures.push_back("remaining checks skipped: not axis-aligned");
    return rep;
  }

  const auto sticks = knot.sticks();

  rep.transversal_corners = true;
  for (size_t i = 0; i < n; ++i) {
    if (sticks[i].axis == sticks[(i + 1) % n].axis) {
      rep.transversal_corners = false;
      std::ostringstream os;
      os << "corner transversality: sticks " << i << " and " << (i + 1) % n << " share axis "
         << axis_name(sticks[i].axis);
      rep.failures.push_back(os.str());
    }
  }

  rep.edges_distinct = true;
  {
    std::set<std::pair<Vec3, Vec3>> edges;
    for (size_t i = 0; i < n; ++i) {
      Vec3 a = vs[i];
      const Vec3 b = vs[(i + 1) % n];
      const Axis ax = segment_axis(a, b);
      const int lo = std::min(a[ax], b[ax]);
      const int hi = std::max(a[ax], b[ax]);
      for (int v = lo; v < hi; ++v) {
        Vec3 e0 = a, e1 = a;
        switch (ax) {
          case Axis::X: e0.x = v; e1.x = v + 1; break;
          case Axis::Y: e0.y = v; e1.y = v + 1; break;
          case Axis::Z: e0.z = v; e1.z = v + 1; break;
        }
        if (!edges.insert({e0, e1}).second) {
          rep.edges_distinct = false;
          rep.failures.push_back("edge distinctness: unit edge " + vec_str(e0) + "-" + vec_str(e1) +
                                 " repeats");
        }
      }
    }
  }

  rep.sticks_disjoint = !repeated;
  for (size_t i = 0; i < n; ++i) {
    const Box bi = stick_box(sticks[i]);
    for (size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const Overlap o = intersect(bi, stick_box(sticks[j]));
      if (o.empty) continue;
      if (adjacent) {
        const Vec3 shared = (j == i + 1) ? vs[j] : vs[0];
        if (!o.single_point() || o.point() != shared) {
          rep.sticks_disjoint = false;
          std::ostringstream os;
          os << "stick disjointness: adjacent sticks " << i << " and " << j
             << " overlap beyond their shared corner";
          rep.failures.push_back(os.str());
        }
      } else {
        rep.sticks_disjoint = false;
        std::ostringstream os;
        os << "stick disjointness: sticks " << i << " and " << j << " intersect";
        rep.failures.push_back(os.str());
      }
    }
  }
  return rep;
}

LevelReport is_properly_leveled(const LatticeKnot& knot) {
  LevelReport rep;
  for (const LatticeStick& s : knot.sticks()) {
    auto& counts = rep.endpoint_counts[static_cast<size_t>(s.axis)];
    ++counts[s.lo];
    ++counts[s.hi];
    ++rep.stick_counts[static_cast<size_t>(s.axis)];
  }
  rep.properly_leveled = true;
  for (size_t a = 0; a < 3; ++a) {
    if (rep.stick_counts[a] == 0) rep.properly_leveled = false;
    for (const auto& [level, count] : rep.endpoint_counts[a]) {
      (void)level;
      if (count != 2) rep.properly_leveled = false;
    }
  }
  return rep;
}

std::vector<Vec3> normalize_corners(std::vector<Vec3> vertices) {
  bool changed = true;
  while (changed && vertices.size() > 2) {
    changed = false;
    std::vector<Vec3> next;
    next.reserve(vertices.size());
    const size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
      const Vec3& prev = vertices[(i + n - 1) % n];
      const Vec3& cur = vertices[i];
      const Vec3& nxt = vertices[(i + 1) % n];
      if (cur == nxt) {  // zero-length move
        changed = true;
        continue;
      }
      if (prev != cur && diff_count(prev, cur) == 1 && diff_count(cur, nxt) == 1 &&
          segment_axis(prev, cur) == segment_axis(cur, nxt)) {  // collinear corner
        changed = true;
        continue;
      }
      next.push_back(cur);
    }
    vertices = std::move(next);
  }
  return vertices;
}

std::vector<Vec3> compact_levels(std::vector<Vec3> vertices) {
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    std::set<int> used;
    for (const Vec3& v : vertices) used.insert(v[axis]);
    std::map<int, int> rank;
    int r = 1;
    for (int v : used) rank[v] = r++;
    for (Vec3& v : vertices) {
      switch (axis) {
        case Axis::X: v.x = rank[v.x]; break;
        case Axis::Y: v.y = rank[v.y]; break;
        case Axis::Z: v.z = rank[v.z]; break;
      }
    }
  }
  return vertices;
}

LatticeKnot knot_from_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("malformed knot JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.size() != 1 || !doc.contains("vertices")) {
    throw std::runtime_error("knot JSON must be an object with a single \"vertices\" key");
  }
  const auto& verts = doc["vertices"];
  if (!verts.is_array()) throw std::runtime_error("vertices: expected an array");
  LatticeKnot knot;
  for (size_t i = 0; i < verts.size(); ++i) {
    const auto& v = verts[i];
    if (!v.is_array() || v.size() != 3 || !v[0].is_number_integer() ||
        !v[1].is_number_integer() || !v[2].is_number_integer()) {
      throw std::runtime_error("vertices[" + std::to_string(i) + "]: expected [x, y, z] integers");
    }
    knot.vertices.push_back({v[0].get<int>(), v[1].get<int>(), v[2].get<int>()});
  }
  return knot;
}

std::string knot_to_json(const LatticeKnot& knot) {
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const Vec3& v : knot.vertices) verts.push_back({v.x, v.y, v.z});
  nlohmann::ordered_json doc;
  doc["vertices"] = std::move(verts);
  return doc.dump(2) + "\n";
}

std::string knot_to_obj(const LatticeKnot& knot) {
  std::ostringstream os;
  for (const Vec3& v : knot.vertices) os << "v " << v.x << " " << v.y << " " << v.z << "\n";
  os << "l";
  for (size_t i = 1; i <= knot.vertices.size(); ++i) os << " " << i;
  os << " 1\n";
  return os.str();
}

std::string knot_to_csv(const LatticeKnot& knot) {
  std::ostringstream os;
  os << "x,y,z\n";
  for (const Vec3& v : knot.vertices) os << v.x << "," << v.y << "," << v.z << "\n";
  return os.str();
}

}  // namespace knotforge

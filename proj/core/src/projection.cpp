#include "knotforge/projection.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotforge {

namespace {

using Rat = boost::multiprecision::cpp_rational;

struct R2 {
  Rat x, y;
  bool operator<(const R2& o) const { return x < o.x || (x == o.x && y < o.y); }
  bool operator==(const R2& o) const { return x == o.x && y == o.y; }
};

Rat cross(const R2& a, const R2& b) { return a.x * b.y - a.y * b.x; }

struct ProjSeg {
  R2 a, b;        // projected endpoints, in walk direction
  Rat za, zb;     // source z at each endpoint
  int dir_x = 0;  // sign pattern of the projected direction
  int dir_y = 0;
};

struct CrossingHit {
  int seg_over = 0, seg_under = 0;
  Rat t_over, t_under;  // parameters along each segment
  R2 point;
};

}  // namespace

PlanarDiagram project_once(const LatticeKnot& knot, int halvings) {
  const auto& vs = knot.vertices;
  const size_t n = vs.size();
  if (n < 4) throw std::invalid_argument("project: not a closed lattice knot");

  int extent = 1;
  for (const Vec3& v : vs) {
    extent = std::max({extent, std::abs(v.x), std::abs(v.y), std::abs(v.z)});
  }
  Rat eps = Rat(1, 4 * static_cast<long long>(extent + 1) * (extent + 1));
  for (int i = 0; i < halvings; ++i) eps /= 2;
  const Rat eps2 = eps * eps;

  std::vector<ProjSeg> segs(n);
  for (size_t i = 0; i < n; ++i) {
    const Vec3& a = vs[i];
    const Vec3& b = vs[(i + 1) % n];
    ProjSeg s;
    s.a = {a.x + eps * a.z, a.y + eps2 * a.z};
    s.b = {b.x + eps * b.z, b.y + eps2 * b.z};
    s.za = a.z;
    s.zb = b.z;
    const Rat dx = s.b.x - s.a.x;
    const Rat dy = s.b.y - s.a.y;
    s.dir_x = dx == 0 ? 0 : (dx > 0 ? 1 : -1);
    s.dir_y = dy == 0 ? 0 : (dy > 0 ? 1 : -1);
    segs[i] = std::move(s);
  }

  std::vector<CrossingHit> hits;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;  // consecutive sticks only share their corner
      const ProjSeg& p = segs[i];
      const ProjSeg& q = segs[j];
      const R2 r{p.b.x - p.a.x, p.b.y - p.a.y};
      const R2 w{q.b.x - q.a.x, q.b.y - q.a.y};
      const R2 pq{q.a.x - p.a.x, q.a.y - p.a.y};
      const Rat denom = cross(r, w);
      if (denom == 0) {
        if (cross(pq, r) != 0) continue;  // parallel, different lines
        // Same projected line. 3D-disjoint sticks on a common line stay
        // disjoint under the shear; anything else is a genericity failure.
        const Rat r2 = r.x * r.x + r.y * r.y;
        Rat t0 = (pq.x * r.x + pq.y * r.y) / r2;
        Rat t1 = t0 + (w.x * r.x + w.y * r.y) / r2;
        if (t1 < t0) std::swap(t0, t1);
        if (t1 >= 0 && t0 <= 1) {
          throw GenericityError(static_cast<int>(i), static_cast<int>(j), "collinear overlap");
        }
        continue;
      }
      const Rat t = cross(pq, w) / denom;
      const Rat u = cross(pq, r) / denom;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      if (t == 0 || t == 1 || u == 0 || u == 1) {
        throw GenericityError(static_cast<int>(i), static_cast<int>(j),
                              "endpoint touches another stick's projection");
      }
      const Rat zi = p.za + t * (p.zb - p.za);
      const Rat zj = q.za + u * (q.zb - q.za);
      if (zi == zj) {
        throw GenericityError(static_cast<int>(i), static_cast<int>(j),
                              "projected crossing with equal heights (not an embedding?)");
      }
      CrossingHit hit;
      hit.point = {p.a.x + t * r.x, p.a.y + t * r.y};
      if (zi > zj) {
        hit.seg_over = static_cast<int>(i);
        hit.t_over = t;
        hit.seg_under = static_cast<int>(j);
        hit.t_under = u;
      } else {
        hit.seg_over = static_cast<int>(j);
        hit.t_over = u;
        hit.seg_under = static_cast<int>(i);
        hit.t_under = t;
      }
      hits.push_back(std::move(hit));
    }
  }

  // No two crossings may share a projected point (triple-point check).
  {
    std::map<R2, int> points;
    for (size_t k = 0; k < hits.size(); ++k) {
      auto [it, inserted] = points.try_emplace(hits[k].point, static_cast<int>(k));
      if (!inserted) {
        throw GenericityError(hits[k].seg_over, hits[k].seg_under,
                              "two crossings share a projected point");
      }
    }
  }

  // Passages per segment, ordered by the parameter along the walk.
  std::vector<std::vector<std::pair<Rat, std::pair<int, bool>>>> per_seg(n);
  for (size_t k = 0; k < hits.size(); ++k) {
    const CrossingHit& h = hits[k];
    per_seg[static_cast<size_t>(h.seg_over)].push_back({h.t_over, {static_cast<int>(k), true}});
    per_seg[static_cast<size_t>(h.seg_under)].push_back({h.t_under, {static_cast<int>(k), false}});
  }
  std::vector<PassageEvent> walk;
  walk.reserve(2 * hits.size());
  for (size_t i = 0; i < n; ++i) {
    auto& list = per_seg[i];
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [t, id_over] : list) {
      (void)t;
      walk.push_back({id_over.first, id_over.second, segs[i].dir_x, segs[i].dir_y});
    }
  }
  return diagram_from_passages(walk);
}

Projected project(const LatticeKnot& knot, const ProjectionOptions& options) {
  std::string last;
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    try {
      return Projected{project_once(knot, attempt), attempt + 1};
    } catch (const GenericityError& e) {
      last = e.what();
    }
  }
  throw std::runtime_error("projection failed after " + std::to_string(options.retries + 1) +
                           " attempts: " + last);
}

}  // namespace knotforge

#include "knotforge/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace knotforge {

PlanarDiagram diagram_from_passages(const std::vector<PassageEvent>& walk) {
  if (walk.size() % 2 != 0) throw std::invalid_argument("odd number of passages");
  const int m = static_cast<int>(walk.size() / 2);
  PlanarDiagram d;
  d.strand_count = m;
  if (m == 0) return d;

  std::map<int, std::pair<int, int>> positions;  // crossing -> (under pos, over pos)
  std::vector<int> under_positions;
  for (int pos = 0; pos < static_cast<int>(walk.size()); ++pos) {
    const PassageEvent& e = walk[static_cast<size_t>(pos)];
    auto [it, inserted] = positions.try_emplace(e.crossing, -1, -1);
    int& slot = e.over ? it->second.second : it->second.first;
    if (slot != -1) throw std::invalid_argument("crossing passed twice in the same role");
    slot = pos;
    if (!e.over) under_positions.push_back(pos);
  }
  if (positions.size() != static_cast<size_t>(m)) {
    throw std::invalid_argument("each crossing must be passed exactly twice");
  }
  for (const auto& [id, pq] : positions) {
    (void)id;
    if (pq.first == -1 || pq.second == -1) {
      throw std::invalid_argument("crossing missing an over or under passage");
    }
  }

  // Strand s ends at the s-th undercrossing: it covers the walk positions in
  // (under_positions[s-1], under_positions[s]], cyclically.
  auto strand_of = [&](int pos) {
    auto it = std::lower_bound(under_positions.begin(), under_positions.end(), pos);
    if (it == under_positions.end()) return 0;
    return static_cast<int>(it - under_positions.begin());
  };

  for (const auto& [id, pq] : positions) {
    (void)id;
    const PassageEvent& under = walk[static_cast<size_t>(pq.first)];
    const PassageEvent& over = walk[static_cast<size_t>(pq.second)];
    DiagramCrossing c;
    const int s = strand_of(pq.first);
    c.under_in = s;
    c.under_out = (s + 1) % m;
    c.over_strand = strand_of(pq.second);
    const int cross = under.dir_x * over.dir_y - under.dir_y * over.dir_x;
    if (cross == 0) throw std::invalid_argument("degenerate crossing frame");
    c.sign = cross > 0 ? 1 : -1;
    d.crossings.push_back(c);
  }
  return d;
}

Laurent alexander_from_diagram(const PlanarDiagram& d) {
  const int m = static_cast<int>(d.crossings.size());
  if (m == 0) return Laurent::one();
  if (d.strand_count != m) {
    throw std::invalid_argument("a knot diagram has as many strands as crossings");
  }

  // Single-component check: under_in -> under_out must be one m-cycle.
  {
    std::vector<int> succ(static_cast<size_t>(m), -1);
    for (const DiagramCrossing& c : d.crossings) {
      if (c.under_in < 0 || c.under_in >= m || c.under_out < 0 || c.under_out >= m ||
          c.over_strand < 0 || c.over_strand >= m) {
        throw std::invalid_argument("strand label out of range");
      }
      if (succ[static_cast<size_t>(c.under_in)] != -1) {
        throw std::invalid_argument("strand ends at two crossings");
      }
      succ[static_cast<size_t>(c.under_in)] = c.under_out;
    }
    int at = 0;
    for (int step = 0; step < m; ++step) {
      at = succ[static_cast<size_t>(at)];
      if (at == -1) throw std::invalid_argument("broken strand succession");
      if (at == 0 && step + 1 != m) {
        throw std::invalid_argument("diagram has more than one component");
      }
    }
    if (at != 0) throw std::invalid_argument("diagram has more than one component");
  }

  const Laurent t = Laurent::term(1);
  const Laurent one = Laurent::one();
  std::vector<std::vector<Laurent>> matrix(
      static_cast<size_t>(m), std::vector<Laurent>(static_cast<size_t>(m), Laurent::zero()));
  for (int i = 0; i < m; ++i) {
    const DiagramCrossing& c = d.crossings[static_cast<size_t>(i)];
    auto& row = matrix[static_cast<size_t>(i)];
    if (c.sign > 0) {
      row[static_cast<size_t>(c.over_strand)] += one - t;
      row[static_cast<size_t>(c.under_in)] += t;
      row[static_cast<size_t>(c.under_out)] -= one;
    } else {
      row[static_cast<size_t>(c.over_strand)] += t - one;
      row[static_cast<size_t>(c.under_in)] += one;
      row[static_cast<size_t>(c.under_out)] -= t;
    }
  }

  std::vector<std::vector<Laurent>> minor;
  minor.reserve(static_cast<size_t>(m - 1));
  for (int i = 0; i + 1 < m; ++i) {
    auto& row = matrix[static_cast<size_t>(i)];
    row.pop_back();
    minor.push_back(std::move(row));
  }
  return laurent_det(std::move(minor)).canonical();
}

std::string diagram_to_json(const PlanarDiagram& d) {
  nlohmann::ordered_json crossings = nlohmann::ordered_json::array();
  for (const DiagramCrossing& c : d.crossings) {
    crossings.push_back({{"over", c.over_strand},
                         {"under_in", c.under_in},
                         {"under_out", c.under_out},
                         {"sign", c.sign}});
  }
  nlohmann::ordered_json doc;
  doc["strands"] = d.strand_count;
  doc["crossings"] = std::move(crossings);
  return doc.dump(2) + "\n";
}

}  // namespace knotforge

#pragma once

// Reference implementations for the test suites. These stay independent of
// the library's computation paths: the determinant is expanded by cofactors,
// edge bounds are summed term by term, and expected construction counts are
// read straight off the arcs.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "knotforge/arcs.hpp"
#include "knotforge/laurent.hpp"

namespace oracles {

inline knotforge::Laurent cofactor_det(const std::vector<std::vector<knotforge::Laurent>>& m) {
  const size_t n = m.size();
  if (n == 0) return knotforge::Laurent::one();
  if (n == 1) return m[0][0];
  knotforge::Laurent acc;
  for (size_t k = 0; k < n; ++k) {
    if (m[0][k].is_zero()) continue;
    std::vector<std::vector<knotforge::Laurent>> sub(n - 1);
    for (size_t i = 1; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (j != k) sub[i - 1].push_back(m[i][j]);
      }
    }
    const knotforge::Laurent term = m[0][k] * cofactor_det(sub);
    if (k % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

// The level-by-level sum behind the per-axis edge bound: 2 * sum 2i up to the
// middle, plus the middle band itself when the level count is even.
inline long long axis_edge_sum(long long n) {
  long long total = 0;
  if (n % 2 == 1) {
    for (long long i = 1; i <= (n - 1) / 2; ++i) total += 2 * (2 * i);
  } else {
    for (long long i = 1; i <= n / 2 - 1; ++i) total += 2 * (2 * i);
    total += n;
  }
  return total;
}

// Uniformly random valid presentation: a random cyclic order of the binding
// indices (consecutive pairs become arcs) with a random page assignment.
inline knotforge::ArcPresentation random_presentation(std::mt19937_64& rng, int n) {
  std::vector<int> bindings(static_cast<size_t>(n));
  std::vector<int> pages(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    bindings[static_cast<size_t>(i)] = i + 1;
    pages[static_cast<size_t>(i)] = i + 1;
  }
  std::shuffle(bindings.begin(), bindings.end(), rng);
  std::shuffle(pages.begin(), pages.end(), rng);
  std::vector<knotforge::Arc> arcs;
  for (int i = 0; i < n; ++i) {
    const int a = bindings[static_cast<size_t>(i)];
    const int b = bindings[static_cast<size_t>((i + 1) % n)];
    arcs.push_back({pages[static_cast<size_t>(i)], std::min(a, b), std::max(a, b)});
  }
  return knotforge::ArcPresentation::require_valid(std::move(arcs));
}

inline std::vector<std::vector<knotforge::Laurent>> random_laurent_matrix(std::mt19937_64& rng,
                                                                          int n) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> fill(0, 2);
  std::vector<std::vector<knotforge::Laurent>> m(static_cast<size_t>(n));
  for (auto& row : m) {
    for (int j = 0; j < n; ++j) {
      knotforge::Laurent entry;
      if (fill(rng) != 0) {  // about a third of entries stay zero
        const int terms = 1 + fill(rng);
        for (int k = 0; k < terms; ++k) entry += knotforge::Laurent::term(exp(rng), coeff(rng));
      }
      row.push_back(entry);
    }
  }
  return m;
}

// Expected per-axis edge counts of the basic build, read off the arcs.
inline long long arc_span_sum(const knotforge::ArcPresentation& ap) {
  long long total = 0;
  for (const knotforge::Arc& a : ap.arcs()) total += a.hi - a.lo;
  return total;
}

inline long long binding_page_gap_sum(const knotforge::ArcPresentation& ap) {
  long long total = 0;
  for (int m = 1; m <= ap.arc_count(); ++m) {
    const auto [i, j] = ap.arcs_at_binding(m);
    total += std::abs(ap.arcs()[static_cast<size_t>(i)].page -
                      ap.arcs()[static_cast<size_t>(j)].page);
  }
  return total;
}

}  // namespace oracles

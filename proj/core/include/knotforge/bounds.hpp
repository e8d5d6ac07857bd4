#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotforge/arcs.hpp"

namespace knotforge {

using Rational = boost::multiprecision::cpp_rational;

/// Most edges a properly leveled knot can carry on one axis with the given
/// number of levels: (n^2 - 1)/2 for odd n, n^2/2 for even n. Levels >= 2.
long long max_axis_edges(long long levels);

/// Sum of max_axis_edges over the three axes, with level counts equal to the
/// given stick counts.
long long bound_from_sticks(long long nx, long long ny, long long nz);

/// A bound evaluation carries both the closed form of the statement and the
/// parity-exact integer from the underlying stick budget; the integer is
/// authoritative. exact_value <= theorem_value always holds.
struct BoundReport {
  Rational theorem_value;
  long long exact_value = 0;
  std::string formula_tag;
  std::map<std::string, long long> inputs;
  std::string note;
};

/// Upper bound for a nontrivial knot other than the trefoil, in terms of the
/// crossing number: closed form 3c^2/2 + 2c + 1/2. Requires c >= 3; c == 3
/// is formula-only (flagged in the note) since the only 3-crossing knot is
/// excluded.
BoundReport bound_general(long long c);

/// Sharper bound for non-alternating prime knots: 3c^2/2 - 4c + 5/2, c >= 8.
BoundReport bound_nonalt_prime(long long c);

/// Bound for the (n+1,n)-torus knot, n >= 3: with c = n^2 - 1, the closed
/// form 6c + 2 sqrt(c+1) + 6 (an integer). n == 2 is the trefoil and is
/// rejected with a domain_error.
BoundReport bound_torus(long long n);

/// Arc-count guarantee by knot class: c+2 in general, c for non-alternating
/// prime knots, 2n+1 for (n+1,n)-torus knots.
long long arc_index_upper(const KnotMeta& meta);

/// Bound selection for a catalog row. The trefoil (general, c == 3) falls
/// back to the stick-budget bound of the end-reduced construction on the
/// shipped presentation.
BoundReport bound_for_meta(const KnotMeta& meta, int presentation_arcs);

/// The two reference ropelength upper bounds: 1.64 c^2 + 7.69 c + 6.74 and
/// 272 c^{3/2} + 168 c + 44 c^{1/2} + 22. Exact when sqrt(c) is integral,
/// otherwise sqrt(c) is taken to 12 decimal digits (documented precision).
std::pair<Rational, Rational> ropelength_bounds(long long c);

/// Integers print bare; other values print as exact decimals when the
/// denominator allows it, falling back to num/den.
std::string format_rational(const Rational& r);

}  // namespace knotforge

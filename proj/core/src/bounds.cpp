#include "knotforge/bounds.hpp"

#include <sstream>
#include <stdexcept>

namespace knotforge {

namespace mp = boost::multiprecision;

long long max_axis_edges(long long levels) {
  if (levels < 2) throw std::domain_error("max_axis_edges needs at least 2 levels");
  return (levels % 2 == 1) ? (levels * levels - 1) / 2 : levels * levels / 2;
}

long long bound_from_sticks(long long nx, long long ny, long long nz) {
  return max_axis_edges(nx) + max_axis_edges(ny) + max_axis_edges(nz);
}

BoundReport bound_general(long long c) {
  if (c < 3) throw std::domain_error("bound_general needs crossing number >= 3");
  BoundReport rep;
  rep.theorem_value = Rational(3 * c * c + 4 * c + 1, 2);
  rep.exact_value = (c % 2 == 1) ? (3 * c * c + 4 * c + 1) / 2 : (3 * c * c + 4 * c) / 2;
  rep.formula_tag = "general";
  rep.inputs["c"] = c;
  if (c == 3) {
    rep.note = "formula-only: the only 3-crossing knot is the trefoil, which the bound excludes";
  }
  return rep;
}

BoundReport bound_nonalt_prime(long long c) {
  if (c < 8) throw std::domain_error("bound_nonalt_prime needs crossing number >= 8");
  BoundReport rep;
  rep.theorem_value = Rational(3 * c * c - 8 * c + 5, 2);
  rep.exact_value = bound_from_sticks(c - 2, c - 1, c - 1);
  rep.formula_tag = "nonalternating-prime";
  rep.inputs["c"] = c;
  return rep;
}

BoundReport bound_torus(long long n) {
  if (n == 2) {
    throw std::domain_error("the (3,2)-torus knot is the trefoil 3_1, which the bound excludes");
  }
  if (n < 3) throw std::domain_error("bound_torus needs torus parameter >= 3");
  const long long c = n * n - 1;
  const long long a = 2 * n + 1;
  BoundReport rep;
  rep.theorem_value = Rational(6 * c + 2 * n + 6);  // 6c + 2 sqrt(c+1) + 6, integral here
  rep.exact_value = bound_from_sticks(a - 1, a - 1, a);
  rep.formula_tag = "torus";
  rep.inputs["n"] = n;
  rep.inputs["c"] = c;
  rep.inputs["a"] = a;
  return rep;
}

long long arc_index_upper(const KnotMeta& meta) {
  switch (meta.knot_class.kind) {
    case KnotClassKind::general:
      return meta.crossing_number + 2;
    case KnotClassKind::nonalternating_prime:
      return meta.crossing_number;
    case KnotClassKind::torus:
      return 2LL * meta.knot_class.torus_n + 1;
  }
  throw std::logic_error("unknown knot class");
}

BoundReport bound_for_meta(const KnotMeta& meta, int presentation_arcs) {
  switch (meta.knot_class.kind) {
    case KnotClassKind::torus:
      if (meta.knot_class.torus_n >= 3) return bound_torus(meta.knot_class.torus_n);
      break;  // torus(2) is the trefoil
    case KnotClassKind::nonalternating_prime:
      return bound_nonalt_prime(meta.crossing_number);
    case KnotClassKind::general:
      if (meta.crossing_number >= 4) return bound_general(meta.crossing_number);
      break;
  }
  // The trefoil: no crossing-number formula applies, but the end-reduced
  // construction on an n-arc presentation is still properly leveled with
  // (n-1, n-1, n) sticks.
  const long long n = presentation_arcs;
  BoundReport rep;
  rep.exact_value = bound_from_sticks(n - 1, n - 1, n);
  rep.theorem_value = Rational(rep.exact_value);
  rep.formula_tag = "stick-budget";
  rep.inputs["arcs"] = n;
  rep.note = "crossing-number bound excludes the trefoil; stick-budget bound shown";
  return rep;
}

std::pair<Rational, Rational> ropelength_bounds(long long c) {
  if (c < 0) throw std::domain_error("ropelength_bounds needs a nonnegative crossing number");
  const Rational quad = Rational(164, 100) * c * c + Rational(769, 100) * c + Rational(674, 100);

  // sqrt(c) exactly when integral, else floor(sqrt(c * 10^24)) / 10^12.
  Rational root;
  const mp::cpp_int ci = c;
  const mp::cpp_int isqrt_c = mp::sqrt(ci);
  if (isqrt_c * isqrt_c == ci) {
    root = Rational(isqrt_c);
  } else {
    const mp::cpp_int scale = mp::pow(mp::cpp_int(10), 12);
    const mp::cpp_int scaled = ci * scale * scale;
    root = Rational(mp::sqrt(scaled), scale);
  }
  const Rational power = 272 * root * c + 168 * Rational(c) + 44 * root + 22;
  return {quad, power};
}

std::string format_rational(const Rational& r) {
  const mp::cpp_int num = mp::numerator(r);
  mp::cpp_int den = mp::denominator(r);
  if (den == 1) return num.str();
  // Exact decimal when the denominator is of the form 2^a 5^b.
  mp::cpp_int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d == 1 && twos <= 24 && fives <= 24) {
    const int digits = std::max(twos, fives);
    mp::cpp_int scaled = num;
    for (int i = 0; i < digits - twos; ++i) scaled *= 2;
    for (int i = 0; i < digits - fives; ++i) scaled *= 5;
    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) <= digits) {
      s.insert(0, static_cast<size_t>(digits + 1 - static_cast<int>(s.size())), '0');
    }
    s.insert(s.size() - static_cast<size_t>(digits), ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return (neg ? "-" : "") + s;
  }
  std::ostringstream os;
  os << num.str() << "/" << den.str();
  return os.str();
}

}  // namespace knotforge

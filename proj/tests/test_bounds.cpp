#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knotforge/bounds.hpp"

#include "oracles.hpp"

using namespace knotforge;

TEST_CASE("max_axis_edges: fixed values and the summation oracle") {
  CHECK(max_axis_edges(2) == 2);
  CHECK(max_axis_edges(5) == 12);
  CHECK(max_axis_edges(6) == 18);
  CHECK_THROWS_AS(max_axis_edges(1), std::domain_error);
  for (long long n = 2; n <= 50; ++n) {
    CHECK(max_axis_edges(n) == oracles::axis_edge_sum(n));
  }
}

TEST_CASE("bound_from_sticks composes the axis bounds") {
  CHECK(bound_from_sticks(4, 5, 5) == 32);
  CHECK(bound_from_sticks(2, 2, 2) == 6);
  CHECK(bound_from_sticks(6, 6, 7) == 60);
}

TEST_CASE("general bound: the published table and the parity-exact path") {
  CHECK(bound_general(4).exact_value == 32);
  CHECK(bound_general(5).exact_value == 48);
  CHECK(bound_general(6).exact_value == 66);
  CHECK(bound_general(7).exact_value == 88);
  CHECK(bound_general(8).exact_value == 112);

  // c = 3 is formula-only: the only 3-crossing knot is excluded.
  const BoundReport c3 = bound_general(3);
  CHECK(c3.exact_value == 20);
  CHECK(c3.theorem_value == Rational(20));
  CHECK_FALSE(c3.note.empty());
  CHECK_THROWS_AS(bound_general(2), std::domain_error);

  for (long long c = 3; c <= 100; ++c) {
    const BoundReport rep = bound_general(c);
    CHECK(Rational(rep.exact_value) <= rep.theorem_value);
    CHECK(rep.exact_value >= 0);
    // The stick budget behind the theorem: (c, c+1, c+1) levels.
    CHECK(rep.exact_value == bound_from_sticks(c, c + 1, c + 1));
  }
}

TEST_CASE("non-alternating prime bound") {
  const BoundReport c8 = bound_nonalt_prime(8);
  CHECK(c8.exact_value == 66);
  CHECK(c8.theorem_value == Rational(133, 2));  // 66.5
  const BoundReport c9 = bound_nonalt_prime(9);
  CHECK(c9.exact_value == 88);
  CHECK(c9.theorem_value == Rational(88));
  CHECK_THROWS_AS(bound_nonalt_prime(7), std::domain_error);
  for (long long c = 8; c <= 100; ++c) {
    const BoundReport rep = bound_nonalt_prime(c);
    CHECK(Rational(rep.exact_value) <= rep.theorem_value);
  }
}

TEST_CASE("torus bound: closed form and stick path agree") {
  const BoundReport n3 = bound_torus(3);
  CHECK(n3.exact_value == 60);
  CHECK(n3.theorem_value == Rational(60));
  const BoundReport n4 = bound_torus(4);
  CHECK(n4.exact_value == 104);
  CHECK(n4.theorem_value == Rational(104));

  CHECK_THROWS_WITH_AS(bound_torus(2), doctest::Contains("3_1"), std::domain_error);

  for (long long n = 3; n <= 20; ++n) {
    const BoundReport rep = bound_torus(n);
    CHECK(Rational(rep.exact_value) == rep.theorem_value);
    // The torus path never loses to the general bound at the same crossing number.
    CHECK(rep.exact_value <= bound_general(n * n - 1).exact_value);
  }
}

TEST_CASE("arc index guarantees by class") {
  CHECK(arc_index_upper({"4_1", 4, {KnotClassKind::general, 0}}) == 6);
  CHECK(arc_index_upper({"8_20", 8, {KnotClassKind::nonalternating_prime, 0}}) == 8);
  CHECK(arc_index_upper({"8_19", 8, {KnotClassKind::torus, 3}}) == 7);
}

TEST_CASE("bound selection for catalog rows") {
  CHECK(bound_for_meta({"8_19", 8, {KnotClassKind::torus, 3}}, 7).formula_tag == "torus");
  CHECK(bound_for_meta({"8_20", 8, {KnotClassKind::nonalternating_prime, 0}}, 8).formula_tag ==
        "nonalternating-prime");
  CHECK(bound_for_meta({"4_1", 4, {KnotClassKind::general, 0}}, 6).formula_tag == "general");
  // The trefoil: no crossing-number formula applies; the stick-budget bound
  // of the end-reduced build on 5 arcs is (4,4,5) levels = 28 edges. The
  // torus(2) tagging of the same knot takes the same fallback.
  const BoundReport trefoil = bound_for_meta({"3_1", 3, {KnotClassKind::general, 0}}, 5);
  CHECK(trefoil.formula_tag == "stick-budget");
  CHECK(trefoil.exact_value == 28);
  const BoundReport as_torus = bound_for_meta({"3_1", 3, {KnotClassKind::torus, 2}}, 5);
  CHECK(as_torus.formula_tag == "stick-budget");
  CHECK(as_torus.exact_value == 28);
}

TEST_CASE("ropelength bounds") {
  const auto [quad0, pow0] = ropelength_bounds(0);
  CHECK(quad0 == Rational(674, 100));
  CHECK(pow0 == Rational(22));

  const auto [quad3, pow3] = ropelength_bounds(3);
  CHECK(quad3 == Rational(4457, 100));  // 14.76 + 23.07 + 6.74

  // sqrt(4) = 2 exactly: 272*8 + 168*4 + 44*2 + 22.
  const auto [quad4, pow4] = ropelength_bounds(4);
  CHECK(pow4 == Rational(2958));
  CHECK(quad4 == Rational(164 * 16 + 769 * 4 + 674, 100));

  // Non-square crossing numbers use a 12-digit root; sanity-check against a
  // floating evaluation.
  const auto [quad5, pow5] = ropelength_bounds(5);
  (void)quad5;
  const double expected = 272.0 * 5.0 * 2.2360679774997896 + 168.0 * 5 +
                          44.0 * 2.2360679774997896 + 22.0;
  const double got = static_cast<double>(pow5);
  CHECK(std::abs(got - expected) < 1e-6);
  CHECK_THROWS_AS(ropelength_bounds(-1), std::domain_error);
}

TEST_CASE("rational formatting") {
  CHECK(format_rational(Rational(112)) == "112");
  CHECK(format_rational(Rational(133, 2)) == "66.5");
  CHECK(format_rational(Rational(4457, 100)) == "44.57");
  CHECK(format_rational(Rational(-3, 2)) == "-1.5");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
}

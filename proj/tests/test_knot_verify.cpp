#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>

#include "knotforge/build.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/projection.hpp"
#include "knotforge/verify.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace knotforge;

namespace {

const Laurent kTrefoilPoly = Laurent::from_coeffs({{0, 1}, {1, -1}, {2, 1}});
const Laurent kFigure8Poly = Laurent::from_coeffs({{0, 1}, {1, -3}, {2, 1}});

// The crossing matrix of a diagram, exactly as alexander_from_diagram builds
// it, evaluated here so the cofactor oracle can check the determinant path.
std::vector<std::vector<Laurent>> crossing_minor(const PlanarDiagram& d) {
  const Laurent t = Laurent::term(1);
  const Laurent one = Laurent::one();
  const size_t m = d.crossings.size();
  std::vector<std::vector<Laurent>> matrix(m, std::vector<Laurent>(m));
  for (size_t i = 0; i < m; ++i) {
    const DiagramCrossing& c = d.crossings[i];
    if (c.sign > 0) {
      matrix[i][static_cast<size_t>(c.over_strand)] += one - t;
      matrix[i][static_cast<size_t>(c.under_in)] += t;
      matrix[i][static_cast<size_t>(c.under_out)] -= one;
    } else {
      matrix[i][static_cast<size_t>(c.over_strand)] += t - one;
      matrix[i][static_cast<size_t>(c.under_in)] += one;
      matrix[i][static_cast<size_t>(c.under_out)] -= t;
    }
  }
  std::vector<std::vector<Laurent>> minor;
  for (size_t i = 0; i + 1 < m; ++i) {
    matrix[i].pop_back();
    minor.push_back(std::move(matrix[i]));
  }
  return minor;
}

// Standard trefoil diagram: three positive crossings, strand k passing under
// at crossing k and over at crossing k+2 (mod 3).
PlanarDiagram standard_trefoil() {
  PlanarDiagram d;
  d.strand_count = 3;
  for (int k = 0; k < 3; ++k) {
    d.crossings.push_back({(k + 2) % 3, k, (k + 1) % 3, +1});
  }
  return d;
}

// Standard figure-eight diagram, read off the closed braid form with four
// alternating crossings on strands {a1, a2, a3, b1} = {0, 1, 2, 3}.
PlanarDiagram standard_figure8() {
  PlanarDiagram d;
  d.strand_count = 4;
  d.crossings.push_back({0, 1, 3, +1});
  d.crossings.push_back({2, 0, 1, -1});
  d.crossings.push_back({3, 2, 0, +1});
  d.crossings.push_back({1, 3, 2, -1});
  return d;
}

}  // namespace

TEST_CASE("zero-crossing diagram is the unknot") {
  CHECK(alexander_from_diagram(PlanarDiagram{}) == Laurent::one());
}

TEST_CASE("trefoil diagram against the cofactor oracle") {
  const PlanarDiagram d = standard_trefoil();
  const Laurent via_oracle = oracles::cofactor_det(crossing_minor(d)).canonical();
  CHECK(via_oracle == kTrefoilPoly);
  CHECK(alexander_from_diagram(d) == kTrefoilPoly);
}

TEST_CASE("figure-eight diagram against the cofactor oracle") {
  const PlanarDiagram d = standard_figure8();
  const Laurent via_oracle = oracles::cofactor_det(crossing_minor(d)).canonical();
  CHECK(via_oracle == kFigure8Poly);
  CHECK(alexander_from_diagram(d) == kFigure8Poly);
}

TEST_CASE("multi-component diagrams are rejected") {
  PlanarDiagram d;
  d.strand_count = 2;
  // Two one-strand loops: strand succession 0->0 and 1->1.
  d.crossings.push_back({1, 0, 0, +1});
  d.crossings.push_back({0, 1, 1, +1});
  CHECK_THROWS_AS(alexander_from_diagram(d), std::invalid_argument);
}

TEST_CASE("alexander from arcs: fixed presentations") {
  CHECK(alexander_from_arcs(fixtures::two_arc_unknot()) == Laurent::one());
  CHECK(alexander_from_arcs(fixtures::four_arc_unknot()) == Laurent::one());
  CHECK(alexander_from_arcs(fixtures::trefoil_pentagram()) == kTrefoilPoly);
}

TEST_CASE("projection of a planar polygon has no crossings") {
  const LatticeKnot square{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}};
  const Projected proj = project(square);
  CHECK(proj.attempts == 1);
  CHECK(proj.diagram.crossings.empty());
  CHECK(alexander_from_diagram(proj.diagram) == Laurent::one());
}

TEST_CASE("stacked parallel sticks project without overlap") {
  // A flat rectangle in the y = 0 plane: two x-sticks at z = 0 and z = 1.
  // The shear separates them by eps^2 in y; no crossings appear.
  const LatticeKnot frame{{{0, 0, 0}, {2, 0, 0}, {2, 0, 1}, {0, 0, 1}}};
  REQUIRE(verify_embedding(frame).ok());
  const Projected proj = project(frame);
  CHECK(proj.attempts == 1);
  CHECK(proj.diagram.crossings.empty());
}

TEST_CASE("trefoil pipeline: projection of the reduced build") {
  const LatticeKnot knot = reduce_ends(fixtures::trefoil_pentagram());
  const Projected proj = project(knot);
  CHECK(proj.attempts == 1);
  CHECK(proj.diagram.crossings.size() >= 3);
  CHECK(alexander_from_diagram(proj.diagram).canonical() == kTrefoilPoly);
}

TEST_CASE("projection agrees with the arc diagram on random presentations") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto ap = oracles::random_presentation(rng, n);
    const Laurent arcs_poly = alexander_from_arcs(ap);
    const Projected proj = project(build_basic(ap));
    CHECK(poly_equal_up_to_units(alexander_from_diagram(proj.diagram), arcs_poly));
  }
}

TEST_CASE("classical smoke invariants on the pipeline") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto ap = oracles::random_presentation(rng, n);
    const Laurent poly = alexander_from_arcs(ap).canonical();
    const long long at_one = poly.eval_at(1);
    CHECK((at_one == 1 || at_one == -1));
    CHECK(poly.eval_at(-1) % 2 != 0);
  }
}

TEST_CASE("verify_knot_against ties the pipeline together") {
  const auto ap = fixtures::trefoil_pentagram();
  const VerifyReport good = verify_knot_against(reduce_ends(ap), ap);
  CHECK(good.ok());
  CHECK(good.alexander_match);
  CHECK(good.crossings >= 3);

  // Same knot against a different presentation: polynomial mismatch.
  std::mt19937_64 rng(33);
  knotforge::ArcPresentation other = oracles::random_presentation(rng, 6);
  while (poly_equal_up_to_units(alexander_from_arcs(other), kTrefoilPoly)) {
    other = oracles::random_presentation(rng, 6);
  }
  const VerifyReport bad = verify_knot_against(reduce_ends(ap), other);
  CHECK_FALSE(bad.ok());
  CHECK(bad.embedding.ok());
  CHECK_FALSE(bad.alexander_match);

  // A planar square fails leveledness but still projects.
  const LatticeKnot square{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}};
  const VerifyReport flat = verify_knot_against(square, ap);
  CHECK_FALSE(flat.ok());
  CHECK(flat.embedding.ok());
  CHECK_FALSE(flat.levels.properly_leveled);
}

TEST_CASE("project_once reports the offending stick pair") {
  // A self-intersecting polygon: stick 3 passes through stick 0 at (1,0,0).
  // The crossing has equal heights, which the projection flags with the pair.
  const LatticeKnot crossed{
      {{0, 0, 0}, {2, 0, 0}, {2, 2, 0}, {1, 2, 0}, {1, -1, 0}, {0, -1, 0}}};
  REQUIRE_FALSE(verify_embedding(crossed).ok());
  CHECK_THROWS_AS((void)project_once(crossed), GenericityError);
  try {
    (void)project_once(crossed);
  } catch (const GenericityError& e) {
    CHECK(e.stick_a == 0);
    CHECK(e.stick_b == 3);
  }
}

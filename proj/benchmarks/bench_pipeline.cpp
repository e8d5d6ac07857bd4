#include <benchmark/benchmark.h>

#include <random>

#include "knotforge/bounds.hpp"
#include "knotforge/build.hpp"
#include "knotforge/verify.hpp"

#include "oracles.hpp"

namespace {

using namespace knotforge;

ArcPresentation torus_step_presentation(int n, int step) {
  std::vector<Arc> arcs;
  for (int p = 1; p <= n; ++p) {
    const int other = (p - 1 + step) % n + 1;
    arcs.push_back({p, std::min(p, other), std::max(p, other)});
  }
  return ArcPresentation::require_valid(std::move(arcs));
}

void BM_construct(benchmark::State& state) {
  const ArcPresentation ap = torus_step_presentation(static_cast<int>(state.range(0)), 2);
  const KnotMeta meta{"torus", 1, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct(ap, meta));
  }
}
BENCHMARK(BM_construct)->Arg(7)->Arg(9)->Arg(13);

void BM_symmetry_orbit(benchmark::State& state) {
  std::mt19937_64 rng(99);
  const ArcPresentation ap = oracles::random_presentation(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetry_orbit(ap));
  }
}
BENCHMARK(BM_symmetry_orbit)->Arg(6)->Arg(9);

void BM_project_alexander(benchmark::State& state) {
  const ArcPresentation ap = torus_step_presentation(static_cast<int>(state.range(0)), 2);
  const LatticeKnot knot = reduce_ends(ap);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexander_from_diagram(project(knot).diagram));
  }
}
BENCHMARK(BM_project_alexander)->Arg(5)->Arg(9);

void BM_alexander_from_arcs(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const ArcPresentation ap = oracles::random_presentation(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexander_from_arcs(ap));
  }
}
BENCHMARK(BM_alexander_from_arcs)->Arg(6)->Arg(8);

void BM_bound_general(benchmark::State& state) {
  for (auto _ : state) {
    for (long long c = 3; c <= 100; ++c) benchmark::DoNotOptimize(bound_general(c));
  }
}
BENCHMARK(BM_bound_general);

}  // namespace

BENCHMARK_MAIN();

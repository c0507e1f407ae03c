#include <benchmark/benchmark.h>

#include <cmath>

#include "star/fano.hpp"
#include "star/field2d.hpp"
#include "star/symmetry.hpp"
#include "star/transform2d.hpp"

using namespace star;

static void BM_DualSymbolPolygon(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  BranchMatrix u = regular_polygon_branches(m);
  Polynomial p = elementary_symmetric(m - 2, m, ScalarTag::floating);
  for (auto _ : state) {
    StarSymbol s(p, u);
    benchmark::DoNotOptimize(dual_symbol(s).sigma);
  }
}
BENCHMARK(BM_DualSymbolPolygon)->Arg(4)->Arg(8)->Arg(12);

static void BM_DualSymbolDodecahedronE4(benchmark::State& state) {
  BranchMatrix u = platonic_branches(SolidKind::dodecahedron);
  Polynomial p = elementary_symmetric(16, 20, ScalarTag::floating);
  for (auto _ : state) {
    StarSymbol s(p, u);
    benchmark::DoNotOptimize(dual_symbol(s).sigma);
  }
}
BENCHMARK(BM_DualSymbolDodecahedronE4);

static void BM_BranchSymmetries(benchmark::State& state) {
  BranchMatrix u = platonic_branches(SolidKind::icosahedron);
  for (auto _ : state) benchmark::DoNotOptimize(branch_symmetries(u));
}
BENCHMARK(BM_BranchSymmetries);

static void BM_PerfectMatchings(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(perfect_matchings(m));
}
BENCHMARK(BM_PerfectMatchings)->Arg(8)->Arg(12);

static void BM_ChartSolve(benchmark::State& state) {
  ChartSystem cs = chart_equations(4, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_chart_newton(cs, 100, 7));
}
BENCHMARK(BM_ChartSolve);

static void BM_BeamTransform(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Phantom ph;
  Field2D f = make_phantom(ph, Domain2D{n});
  double a = 0.37;
  for (auto _ : state)
    benchmark::DoNotOptimize(beam_transform(f, std::cos(a), std::sin(a)));
}
BENCHMARK(BM_BeamTransform)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_LaplacianSolve(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Phantom ph;
  Field2D f = make_phantom(ph, Domain2D{n});
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_laplacian_power(f, -0.75, 1));
}
BENCHMARK(BM_LaplacianSolve)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <memory>

#include "hss/chevalley.hpp"
#include "hss/curvature.hpp"
#include "hss/hermitian.hpp"
#include "hss/tubes.hpp"

using namespace hss;

namespace {

std::shared_ptr<const StructureConstants> algebra(Family f, int r) {
  return std::make_shared<const StructureConstants>(StructureConstants::build(RootSystem::build(f, r)));
}

std::shared_ptr<const HermitianSpace> space(Family f, int r, int node) {
  return std::make_shared<const HermitianSpace>(HermitianSpace::build(algebra(f, r), node));
}

void BM_StructureConstants(benchmark::State& state, Family f, int r) {
  for (auto _ : state) benchmark::DoNotOptimize(StructureConstants::build(RootSystem::build(f, r)));
}
BENCHMARK_CAPTURE(BM_StructureConstants, D6, Family::D, 6);
BENCHMARK_CAPTURE(BM_StructureConstants, E6, Family::E6, 6);
BENCHMARK_CAPTURE(BM_StructureConstants, E7, Family::E7, 7);

void BM_E7Bracket(benchmark::State& state) {
  const auto sc = algebra(Family::E7, 7);
  const RootIndex a = 0, b = sc->roots().highest_index();
  const AlgebraElement x = sc->u(a) + sc->v(b), y = sc->v(a) + sc->u(1);
  for (auto _ : state) benchmark::DoNotOptimize(sc->bracket(x, y));
}
BENCHMARK(BM_E7Bracket);

void BM_E7JacobiOperator(benchmark::State& state) {
  const auto hs = space(Family::E7, 7, 7);
  const Vector u = hs->u(hs->roots().highest_index());
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_operator(*hs, u));
}
BENCHMARK(BM_E7JacobiOperator)->Unit(benchmark::kMillisecond);

void BM_E7K0Decomposition(benchmark::State& state) {
  const auto hs = space(Family::E7, 7, 7);
  for (auto _ : state) benchmark::DoNotOptimize(k0_decomposition(*hs));
}
BENCHMARK(BM_E7K0Decomposition)->Unit(benchmark::kMillisecond);

void BM_TubeShapeOperator(benchmark::State& state) {
  const FocalModel focal = focal_data(space(Family::D, 6, 6), reference::TubeCase::SO_in_SO);
  for (auto _ : state) benchmark::DoNotOptimize(tube_shape_operator(focal, 0.7));
}
BENCHMARK(BM_TubeShapeOperator);

}  // namespace

BENCHMARK_MAIN();

// Serial reference vs OpenMP kernels on the two workloads that dominate run
// time: radius grids and figure tracing.
#include <benchmark/benchmark.h>

#include "lcp/capacity.hpp"
#include "lcp/exact_maps.hpp"
#include "lcp/kernels.hpp"
#include "lcp/sc_map.hpp"

namespace {

using namespace lcp;

const Triangle& tri_6913() {
  static const Triangle t = Triangle::make(0.0, 6.0, Complex(-13.0 / 3.0, 4.0 * std::sqrt(35.0) / 3.0));
  return t;
}

template <bool Parallel>
void BM_RadiusGridSC(benchmark::State& state) {
  const sc::SCMap map = sc::SCMap::build(tri_6913());
  const auto pts = kernels::square_grid(tri_6913(), static_cast<int>(state.range(0)));
  const kernels::PointFn f = [&](Complex w) { return map.inner_radius(w).radius; };
  for (auto _ : state) {
    auto r = Parallel ? kernels::evaluate_parallel(f, pts) : kernels::evaluate_serial(f, pts);
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
}

template <bool Parallel>
void BM_RadiusGridSigma(benchmark::State& state) {
  const auto pts = kernels::square_grid(exact::iso_right_unit().triangle, static_cast<int>(state.range(0)));
  const kernels::PointFn f = [](Complex w) { return 1.0 / exact::h_sigma(w); };
  for (auto _ : state) {
    auto r = Parallel ? kernels::evaluate_parallel(f, pts) : kernels::evaluate_serial(f, pts);
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
}

template <bool Parallel>
void BM_FigureSC(benchmark::State& state) {
  const Complex center(0.929617, 1.842564);
  for (auto _ : state) {
    auto fig = cap::figure_geometry(tri_6913(), center, 10, 24, static_cast<int>(state.range(0)), Parallel);
    benchmark::DoNotOptimize(fig.circle_images.data());
  }
}

}  // namespace

BENCHMARK(BM_RadiusGridSC<false>)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadiusGridSC<true>)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RadiusGridSigma<false>)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadiusGridSigma<true>)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FigureSC<false>)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FigureSC<true>)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

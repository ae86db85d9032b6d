#include <benchmark/benchmark.h>

#include "origami/constructions.hpp"

using namespace origami;

namespace {

const Origami &z_origami(int k) {
  static const Origami z[] = {build_Z(1).z.origami, build_Z(2).z.origami, build_Z(3).z.origami,
                              build_Z(4).z.origami};
  return z[k - 1];
}

void BM_canonical_parallel(benchmark::State &state) {
  const Origami &o = z_origami(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_form(o));
  state.counters["squares"] = static_cast<double>(o.size());
}

void BM_canonical_serial(benchmark::State &state) {
  const Origami &o = z_origami(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_form_serial(o));
  state.counters["squares"] = static_cast<double>(o.size());
}

void BM_orbit_parallel(benchmark::State &state) {
  const Origami &o = z_origami(1);
  OrbitLimits limits{static_cast<std::size_t>(state.range(0)), 600.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(veech_orbit(o, limits));
}

void BM_orbit_serial(benchmark::State &state) {
  const Origami &o = z_origami(1);
  OrbitLimits limits{static_cast<std::size_t>(state.range(0)), 600.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(veech_orbit_serial(o, limits));
}

} // namespace

BENCHMARK(BM_canonical_parallel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_canonical_serial)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_orbit_parallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_orbit_serial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

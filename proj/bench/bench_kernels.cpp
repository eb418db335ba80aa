#include <benchmark/benchmark.h>

#include "stab/bundle.hpp"
#include "stab/polytope.hpp"

using namespace stab;

namespace {

BundleSpec heavy_spec() {
    return BundleSpec{{{1, 4, 1}, {1, -4, 1}, {2, 3, 1}, {3, -2, 1}, {1, 1, 1}}};
}

void bm_sup_psi_serial(benchmark::State& state) {
    BundleSpec spec = heavy_spec();
    long long b = weight_bound_for(spec);
    for (auto _ : state) {
        auto r = brute_force_sup_psi_serial(spec, b);
        benchmark::DoNotOptimize(r.leaves);
    }
}
BENCHMARK(bm_sup_psi_serial)->Unit(benchmark::kMillisecond);

void bm_sup_psi_parallel(benchmark::State& state) {
    BundleSpec spec = heavy_spec();
    long long b = weight_bound_for(spec);
    for (auto _ : state) {
        auto r = brute_force_sup_psi(spec, b);
        benchmark::DoNotOptimize(r.leaves);
    }
}
BENCHMARK(bm_sup_psi_parallel)->Unit(benchmark::kMillisecond);

void bm_weight_spectrum_serial(benchmark::State& state) {
    LatticePolytope box = box_polytope({1, 1, 1});
    PLConvexFunction f{{{{0, 0, 0}, 0}, {{1, 1, 1}, -2}}};
    for (auto _ : state) {
        auto s = weight_spectrum_serial(box, f, 1, 40);
        benchmark::DoNotOptimize(s.weights.size());
    }
}
BENCHMARK(bm_weight_spectrum_serial)->Unit(benchmark::kMillisecond);

void bm_weight_spectrum_parallel(benchmark::State& state) {
    LatticePolytope box = box_polytope({1, 1, 1});
    PLConvexFunction f{{{{0, 0, 0}, 0}, {{1, 1, 1}, -2}}};
    for (auto _ : state) {
        auto s = weight_spectrum(box, f, 1, 40);
        benchmark::DoNotOptimize(s.weights.size());
    }
}
BENCHMARK(bm_weight_spectrum_parallel)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "gptk/catalog.hpp"

using namespace gptk;

static void BM_ClosureAGL14(benchmark::State& state) {
    CurvePoly c = rational_m4_gf4();
    const FieldCtx* f = c.ctx();
    uint32_t w = f->primitive_element();
    Collineation g1(Mat3(f, {w, 0, 0, 0, w, 0, 0, 0, 1}), 0);
    Collineation tau(Mat3(f, {1, 0, 1, 0, 1, 0, 0, 0, 1}), 0);
    Collineation g2 = tau.inverse().compose(g1).compose(tau);
    for (auto _ : state) {
        auto g = generate<Collineation>({g1, g2}, Collineation::identity(f));
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_ClosureAGL14);

static void BM_UnitaryClosure216(benchmark::State& state) {
    const UnitaryModel& um = su32(); // built once
    std::vector<Perm> gens{um.group.elems[1], um.group.elems[um.group.order() / 2]};
    for (auto _ : state) {
        auto g = generate<Perm>(gens, Perm::identity(63));
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_UnitaryClosure216);

static void BM_StructureKit216(benchmark::State& state) {
    const UnitaryModel& um = su32();
    for (auto _ : state) benchmark::DoNotOptimize(structure_kit(um.group));
}
BENCHMARK(BM_StructureKit216)->Unit(benchmark::kMillisecond);

#include <benchmark/benchmark.h>

#include "gptk/catalog.hpp"
#include "gptk/galois.hpp"

using namespace gptk;

static void BM_RationalPointsGF64(benchmark::State& state) {
    CurvePoly c = va_nonic_gf8();
    for (auto _ : state) benchmark::DoNotOptimize(rational_points(c, 2));
}
BENCHMARK(BM_RationalPointsGF64);

static void BM_LineSectionVa(benchmark::State& state) {
    CurvePoly c = va_nonic_gf8();
    Line l(c.ctx(), 0, 0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(intersect_line(c, l));
}
BENCHMARK(BM_LineSectionVa);

static void BM_PencilSearchVb(benchmark::State& state) {
    CurvePoly c = quartic_vb_gf13();
    ProjPoint p(c.ctx(), 0, 0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pencil_perspectivities(c, p));
}
BENCHMARK(BM_PencilSearchVb);

static void BM_QuadraticTransform(benchmark::State& state) {
    CurvePoly c = va_nonic_gf8();
    for (auto _ : state) benchmark::DoNotOptimize(quadratic_transform(c));
}
BENCHMARK(BM_QuadraticTransform);

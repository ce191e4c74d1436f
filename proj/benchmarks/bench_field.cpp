#include <benchmark/benchmark.h>

#include "gptk/ffield.hpp"

using namespace gptk;

static void BM_FieldMul(benchmark::State& state) {
    const FieldCtx* f = FieldCtx::get(2, int(state.range(0)));
    uint32_t a = f->primitive_element();
    uint32_t b = f->mul(a, a);
    for (auto _ : state) {
        b = f->mul(b, a);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(3)->Arg(6)->Arg(8);

static void BM_FieldInv(benchmark::State& state) {
    const FieldCtx* f = FieldCtx::get(2, 6);
    uint32_t a = f->primitive_element();
    for (auto _ : state) {
        benchmark::DoNotOptimize(f->inv(a));
        a = f->add(a, 1);
        if (a == 0) a = 1;
    }
}
BENCHMARK(BM_FieldInv);

static void BM_AllRoots(benchmark::State& state) {
    const FieldCtx* f = FieldCtx::get(2, 6);
    // x^9 - 1 splits completely over GF(64)
    std::vector<uint32_t> c(10, 0);
    c[0] = 1;
    c[9] = 1;
    UniPoly poly(f, c);
    for (auto _ : state) benchmark::DoNotOptimize(all_roots(poly));
}
BENCHMARK(BM_AllRoots);

#include <benchmark/benchmark.h>

#include "propg/idempotent.hpp"

using namespace propg;

namespace {

EnginePtr bench_engine() {
    EngineConfig cfg;
    cfg.prime = 7;
    cfg.precision = 6;
    cfg.degree_class = 4;
    cfg.generator_count = 3;
    cfg.delta_twists = {1, 2, 3};
    cfg.gamma_twists = {1, 2, 3};
    return Engine::create(cfg);
}

} // namespace

static void BM_series_mul(benchmark::State& state) {
    auto eng = bench_engine();
    RandomSource rng(1);
    auto a = random_group_element(eng, rng);
    auto b = random_group_element(eng, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_mul);

static void BM_zp_power(benchmark::State& state) {
    auto eng = bench_engine();
    RandomSource rng(2);
    auto g = random_group_element(eng, rng);
    PadicInt e = eng->exact(6).unit_inverse();
    for (auto _ : state)
        benchmark::DoNotOptimize(g.zp_power(e));
}
BENCHMARK(BM_zp_power);

static void BM_epsilon(benchmark::State& state) {
    auto eng = bench_engine();
    DeltaGammaAction action(eng);
    RandomSource rng(3);
    auto g = random_group_element(eng, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(epsilon(g, 3, action));
}
BENCHMARK(BM_epsilon);

static void BM_stabilize(benchmark::State& state) {
    auto eng = bench_engine();
    DeltaGammaAction action(eng);
    RandomSource rng(4);
    auto g = random_group_element(eng, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(stabilize(g, 3, action));
}
BENCHMARK(BM_stabilize);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "propg/bernoulli_iwasawa.hpp"
#include "propg/freelie.hpp"

using namespace propg;

static void BM_bernoulli_mod_691(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(BernoulliTable::compute(691));
}
BENCHMARK(BM_bernoulli_mod_691);

static void BM_irregular_scan_300(benchmark::State& state) {
    for (auto _ : state) {
        std::size_t pairs = 0;
        for (uint64_t p = 3; p <= 300; p += 2)
            if (is_odd_prime(p))
                pairs += irregular_pairs(p).size();
        benchmark::DoNotOptimize(pairs);
    }
}
BENCHMARK(BM_irregular_scan_300);

static void BM_lyndon_basis_24(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lyndon_basis(24));
}
BENCHMARK(BM_lyndon_basis_24);

static void BM_bracket_degree_20(benchmark::State& state) {
    auto a = bracket(LieElement::generator(3), LieElement::generator(5));
    auto b = bracket(LieElement::generator(3), LieElement::generator(9));
    for (auto _ : state)
        benchmark::DoNotOptimize(bracket(a, b));
}
BENCHMARK(BM_bracket_degree_20);

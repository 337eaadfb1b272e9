#include <benchmark/benchmark.h>

#include "sct/character_table.hpp"
#include "sct/lattice.hpp"
#include "sct/schur.hpp"

namespace {

sct::GroupPtr family(const char* kind, int n) {
    return sct::build_group(sct::GroupSpec{sct::GroupSpec::Family{kind, n}});
}

void BM_CharacterTableS4(benchmark::State& state) {
    const auto g = family("symmetric", 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sct::build_character_table(g));
    }
}
BENCHMARK(BM_CharacterTableS4);

void BM_CharacterTableCyclic(benchmark::State& state) {
    const auto g = family("cyclic", static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sct::build_character_table(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CharacterTableCyclic)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_EnumerateSup(benchmark::State& state) {
    const auto g = family("cyclic", static_cast<int>(state.range(0)));
    const auto t = sct::build_character_table(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sct::enumerate_sup(t));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateSup)->DenseRange(8, 12, 2)->Complexity();

void BM_SchurCheck(benchmark::State& state) {
    const auto g = family("quaternion", 8);
    sct::Partition blocks{{0}};
    std::vector<int> rest;
    for (int x = 1; x < 8; ++x) rest.push_back(x);
    blocks.push_back(rest);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sct::find_schur_violation(*g, blocks));
    }
}
BENCHMARK(BM_SchurCheck);

void BM_CyclotomicProduct(benchmark::State& state) {
    const auto a = sct::Cyclotomic::root_of_unity(12, 1) + sct::Cyclotomic(3);
    const auto b = sct::Cyclotomic::root_of_unity(8, 3) - sct::Cyclotomic(sct::make_rational(1, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_CyclotomicProduct);

void BM_IdempotentProduct(benchmark::State& state) {
    const auto g = family("symmetric", 4);
    const auto t = sct::build_character_table(g);
    const auto e = sct::central_idempotent(*t, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sct::algebra_mul(e, e));
    }
}
BENCHMARK(BM_IdempotentProduct);

}  // namespace

BENCHMARK_MAIN();

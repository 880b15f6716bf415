#include <benchmark/benchmark.h>

#include "eulerian/classical.hpp"
#include "eulerian/general.hpp"
#include "eulerian/permutations.hpp"
#include "eulerian/q_analog.hpp"

using namespace eulerian;

static void ClassicalTriangleBuild(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto tri = classical_triangle(max_n);
        benchmark::DoNotOptimize(tri);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ClassicalTriangleBuild)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void GeneralTriangleBuild(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    const Progression prog{Rat::parse("1/2"), Rat::parse("-1/3")};
    for (auto _ : state) {
        auto tri = general_triangle(prog, max_n);
        benchmark::DoNotOptimize(tri);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(GeneralTriangleBuild)->RangeMultiplier(2)->Range(8, 32)->Complexity();

static void QTriangleBuild(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto tri = q_triangle(max_n);
        benchmark::DoNotOptimize(tri);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(QTriangleBuild)->RangeMultiplier(2)->Range(4, 16)->Complexity();

static void EnumerationOracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto counts = eulerian_by_enumeration(n, 10);
        benchmark::DoNotOptimize(counts);
    }
}
BENCHMARK(EnumerationOracle)->DenseRange(5, 9, 1);

static void GeneralEgfCheck(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const Progression prog{Rat(2), Rat(3)};
    for (auto _ : state) {
        auto result = general_egf_check(prog, order);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(GeneralEgfCheck)->DenseRange(4, 12, 2);

#include <benchmark/benchmark.h>

#include <random>

#include "eulerian/integer.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/power_series.hpp"

using namespace eulerian;

namespace {

Poly random_poly(std::mt19937& rng, std::size_t degree) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    std::vector<Rat> coeffs(degree + 1);
    for (auto& c : coeffs) c = Rat(Int(num(rng)), Int(den(rng)));
    return Poly::from_coeffs(std::move(coeffs));
}

}  // namespace

static void PolyMul(benchmark::State& state) {
    std::mt19937 rng(42);
    const auto degree = static_cast<std::size_t>(state.range(0));
    const Poly a = random_poly(rng, degree);
    const Poly b = random_poly(rng, degree);
    for (auto _ : state) {
        Poly p = a * b;
        benchmark::DoNotOptimize(p);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PolyMul)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void PolyEval(benchmark::State& state) {
    std::mt19937 rng(43);
    const Poly p = random_poly(rng, static_cast<std::size_t>(state.range(0)));
    const Rat x = Rat(Int(7), Int(3));
    for (auto _ : state) {
        Rat v = p.eval(x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(PolyEval)->RangeMultiplier(2)->Range(8, 128);

static void SeriesMul(benchmark::State& state) {
    std::mt19937 rng(44);
    const auto order = static_cast<std::size_t>(state.range(0));
    USeries a(order), b(order);
    for (std::size_t i = 0; i <= order; ++i) {
        a.set_coeff(i, random_poly(rng, 4));
        b.set_coeff(i, random_poly(rng, 4));
    }
    for (auto _ : state) {
        USeries s = series_mul(a, b);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SeriesMul)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void Binomial(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        Int b = binomial(n, n / 2);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(Binomial)->RangeMultiplier(4)->Range(16, 1024);

#include <benchmark/benchmark.h>

#include <random>

#include "triplecover/cyclic_oracle.hpp"
#include "triplecover/exact_matrix.hpp"
#include "triplecover/homog_poly.hpp"

using namespace triplecover;

namespace {

ExactMatrix random_matrix(std::size_t n, unsigned long seed) {
    std::mt19937_64 rng(seed);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = BigInt(static_cast<long>(rng() % 2001) - 1000);
        }
    }
    return m;
}

HomogPoly random_poly(int degree, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
    for (BigInt& c : coeffs) {
        c = BigInt(static_cast<long>(rng() % 201) - 100);
    }
    return HomogPoly(degree, std::move(coeffs));
}

}  // namespace

static void BM_Rank(benchmark::State& state) {
    const ExactMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 2024);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(m));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_PolyMul(benchmark::State& state) {
    const HomogPoly p = random_poly(static_cast<int>(state.range(0)), 7);
    const HomogPoly q = random_poly(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_mul(p, q));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMul)->RangeMultiplier(4)->Range(16, 256)->Complexity();

static void BM_GeneratorProfile(benchmark::State& state) {
    const CoverParams params(8, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(generator_profile(params));
    }
}
BENCHMARK(BM_GeneratorProfile);

static void BM_OracleRankPair(benchmark::State& state) {
    const OracleCover cover = build_cover(3, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mult_image_rank(cover, 3, 3));
    }
}
BENCHMARK(BM_OracleRankPair);

static void BM_VerifyGrid(benchmark::State& state) {
    const OracleCover cover = build_cover(3, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_grid(cover, 6));
    }
}
BENCHMARK(BM_VerifyGrid);

BENCHMARK_MAIN();

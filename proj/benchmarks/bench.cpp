#include <benchmark/benchmark.h>

#include <random>

#include "bcb/bounds.hpp"
#include "bcb/eigen.hpp"
#include "bcb/roots.hpp"
#include "bcb/verify.hpp"

using namespace bcb;

namespace {

BCPoly fixed_poly(int degree) {
    std::mt19937_64 rng(99u);
    return sample_monic_poly(rng, degree, 10.0, CoefficientModel::FullBicomplex);
}

}  // namespace

static void BM_BiComplexMul(benchmark::State& state) {
    std::mt19937_64 rng(7u);
    const BiComplex a = sample_coefficient(rng, 10.0, CoefficientModel::FullBicomplex);
    const BiComplex b = sample_coefficient(rng, 10.0, CoefficientModel::FullBicomplex);
    for (auto _ : state) {
        BiComplex c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_BiComplexMul);

static void BM_CxRoots(benchmark::State& state) {
    const BCPoly p = fixed_poly(static_cast<int>(state.range(0)));
    const auto [f, g] = split_poly(p);
    for (auto _ : state) {
        auto roots = cx_roots(f);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_CxRoots)->DenseRange(2, 8, 2);

static void BM_Determinant(benchmark::State& state) {
    std::mt19937_64 rng(17u);
    const BCMatrix a =
        sample_matrix(rng, static_cast<int>(state.range(0)), 10.0, CoefficientModel::FullBicomplex);
    for (auto _ : state) {
        BiComplex d = determinant(a);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Determinant)->DenseRange(2, 8, 2);

static void BM_BoundCatalogOne(benchmark::State& state) {
    const BCPoly p = fixed_poly(6);
    for (auto _ : state) {
        auto b = cauchy_bound(p);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BoundCatalogOne);

static void BM_VerifyPolynomial(benchmark::State& state) {
    const BCPoly p = fixed_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rec = verify_polynomial(p);
        benchmark::DoNotOptimize(rec);
    }
}
BENCHMARK(BM_VerifyPolynomial)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();

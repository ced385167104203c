#include <benchmark/benchmark.h>

#include "ncszego/ball.hpp"
#include "ncszego/lattice.hpp"
#include "ncszego/random.hpp"
#include "ncszego/szego.hpp"

namespace {

using namespace ncszego;

ParamSpec bench_params(int n, int len) {
    Rng rng(99);
    return random_params(rng, n, len, 0.8);
}

void BM_SzegoRecursion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    const ParamSpec p = bench_params(n, len);
    for (auto _ : state) {
        auto fam = szego_recursion(p, len);
        benchmark::DoNotOptimize(fam);
    }
}
BENCHMARK(BM_SzegoRecursion)->Args({2, 3})->Args({2, 4})->Args({3, 3});

void BM_GradedRecursion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    const ParamSpec p = bench_params(n, len);
    for (auto _ : state) {
        auto fam = graded_recursion(p, len);
        benchmark::DoNotOptimize(fam);
    }
}
BENCHMARK(BM_GradedRecursion)->Args({2, 3})->Args({2, 4})->Args({3, 3});

void BM_SynthesizeMoments(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    const ParamSpec p = bench_params(n, len);
    for (auto _ : state) {
        auto m = synthesize_moments(p, len);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_SynthesizeMoments)->Args({2, 3})->Args({2, 4})->Args({3, 3});

void BM_ExtractParams(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    const MomentSpec m = synthesize_moments(bench_params(n, len), len);
    for (auto _ : state) {
        auto p = extract_params(m, len);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ExtractParams)->Args({2, 3})->Args({2, 4})->Args({3, 3});

void BM_DetFormula(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    const MomentSpec m = synthesize_moments(bench_params(n, len), len);
    const Word top = sigma_max(n, len);
    for (auto _ : state) {
        auto phi = det_formula_poly(m, top);
        benchmark::DoNotOptimize(phi);
    }
}
BENCHMARK(BM_DetFormula)->Args({2, 3})->Args({3, 3});

void BM_VerifyLattice(benchmark::State& state) {
    Rng rng(7);
    const ChainMatrix a(random_unit_diag_pd(rng, state.range(0)));
    for (auto _ : state) {
        auto res = verify_identities(a);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_VerifyLattice)->Arg(4)->Arg(8)->Arg(12);

void BM_WeightedKernel(benchmark::State& state) {
    Rng rng(11);
    const MatrixTuple z = random_ball_tuple(rng, 2, state.range(0), 0.6);
    const MatrixTuple w = random_ball_tuple(rng, 2, state.range(0), 0.55);
    const Matrix s = Matrix::Identity(state.range(0), state.range(0));
    for (auto _ : state) {
        auto k = weighted_kernel(z, w, s, 1e-10);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_WeightedKernel)->Arg(1)->Arg(2)->Arg(8);

void BM_DisplacementResidual(benchmark::State& state) {
    Rng rng(13);
    const NcPoly f = random_poly(rng, 2, 3);
    for (auto _ : state) {
        auto r = displacement_residual(f, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_DisplacementResidual)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "lienil/dets.hpp"
#include "lienil/examples.hpp"
#include "lienil/parallel.hpp"

using namespace lienil;

static GrassmannMatrix dense(std::size_t n, std::uint64_t seed) {
    const GrassmannAlgebra e(6);
    Rng rng(seed);
    GrassmannMatrix m(n, n, e.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = e.random_element(rng, 4);
    return m;
}

static void BM_grassmann_mul(benchmark::State &s) {
    const GrassmannAlgebra e(static_cast<unsigned>(s.range(0)));
    Rng rng(1);
    const auto a = e.random_element(rng, 16), b = e.random_element(rng, 16);
    for (auto _: s) {
        benchmark::DoNotOptimize(e.mul(a, b));
    }
}
BENCHMARK(BM_grassmann_mul)->Arg(6)->Arg(10)->Arg(16);

static void BM_sdet(benchmark::State &s) {
    const GrassmannAlgebra e(6);
    const auto m = dense(static_cast<std::size_t>(s.range(0)), 7);
    set_thread_count(static_cast<std::size_t>(s.range(1)));
    for (auto _: s) {
        benchmark::DoNotOptimize(sdet(e, m));
    }
    set_thread_count(0);
}
BENCHMARK(BM_sdet)->Args({3, 1})->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_preadjoint(benchmark::State &s) {
    const GrassmannAlgebra e(6);
    const auto m = dense(static_cast<std::size_t>(s.range(0)), 9);
    for (auto _: s) {
        benchmark::DoNotOptimize(preadjoint(e, m));
    }
}
BENCHMARK(BM_preadjoint)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_charpoly(benchmark::State &s) {
    const auto ex = example_algebra("5.1", {static_cast<std::size_t>(s.range(0)), 1, 6});
    const auto a = sample_supermatrix(ex.spec, 3);
    const unsigned k = static_cast<unsigned>(s.range(1));
    for (auto _: s) {
        benchmark::DoNotOptimize(charpoly(ex.spec.ring(), a, k, Side::Right));
    }
}
BENCHMARK(BM_charpoly)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

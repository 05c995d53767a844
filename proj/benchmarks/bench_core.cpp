#include <benchmark/benchmark.h>

#include <random>

#include "leibniz/analysis.hpp"
#include "leibniz/catalog.hpp"

using namespace leibniz;

namespace {

RatMatrix seeded_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937 gen(seed);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long num = static_cast<long>(gen() % 9) - 4;
            long den = 1 + static_cast<long>(gen() % 3);
            m(i, j) = rat(num, den);
        }
    return m;
}

} // namespace

static void BM_rref_dense(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    RatMatrix m = seeded_matrix(n, n, 12345);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref_dense)->Arg(10)->Arg(20)->Arg(40);

static void BM_kernel_tall_sparse(benchmark::State& state) {
    // the shape the derivation solver produces: many rows, few survive
    LeibnizAlgebra l = example_2_11();
    for (auto _ : state) benchmark::DoNotOptimize(derivation_space(l).basis.size());
}
BENCHMARK(BM_kernel_tall_sparse);

static void BM_hom_space_tensor(benchmark::State& state) {
    ModuleRep t = tensor_module(sl2_module(2), sl2_module(1));
    for (auto _ : state) benchmark::DoNotOptimize(hom_space(t, t).dim());
}
BENCHMARK(BM_hom_space_tensor);

static void BM_levi_lift_scrambled(benchmark::State& state) {
    std::mt19937 gen(777);
    RatMatrix u = RatMatrix::identity(10);
    for (int s = 0; s < 30; ++s) {
        std::size_t r = gen() % 10, c = gen() % 10;
        if (r == c) continue;
        long f = static_cast<long>(gen() % 5) - 2;
        if (f == 0) f = 1;
        for (std::size_t j = 0; j < 10; ++j) u(r, j) += rat(f) * u(c, j);
    }
    LeibnizAlgebra l = change_basis(example_2_11(), u);
    for (auto _ : state) benchmark::DoNotOptimize(levi_lift(l).s_part.dim());
}
BENCHMARK(BM_levi_lift_scrambled);

static void BM_analyze_fixture(benchmark::State& state) {
    LeibnizAlgebra l = example_3_6(2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(l).der_dim);
}
BENCHMARK(BM_analyze_fixture);

BENCHMARK_MAIN();

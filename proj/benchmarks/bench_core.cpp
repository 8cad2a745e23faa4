// Desk-scale timings for the exact kernels: dense rational product,
// elimination, the vectorized equation solver and the {1}-inverse
// parametrization. Entries are small integers; bignum growth inside the
// elimination is part of what is being measured.

#include <benchmark/benchmark.h>

#include <random>

#include "axbsolve/axbsolve.hpp"

namespace {

using axb::Mat;

Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = axb::Rat(static_cast<long>(rng() % 11) - 5);
    return m;
}

void BM_Mul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    Mat a = random_mat(rng, n, n);
    Mat b = random_mat(rng, n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Mul)->Arg(4)->Arg(8)->Arg(16);

void BM_RrefWithTransform(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(11);
    Mat m = random_mat(rng, n, n + 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(axb::rref_with_transform(m));
}
BENCHMARK(BM_RrefWithTransform)->Arg(4)->Arg(8)->Arg(16);

void BM_EquationSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(13);
    Mat a = random_mat(rng, n, n);
    Mat x = random_mat(rng, n, n);
    Mat b = random_mat(rng, n, n);
    Mat c = a * x * b;
    for (auto _ : state)
        benchmark::DoNotOptimize(axb::solution_set(a, b, c));
}
BENCHMARK(BM_EquationSolve)->Arg(2)->Arg(3)->Arg(4);

void BM_OneInverseSample(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(17);
    Mat u = random_mat(rng, n, n / 2 + 1);
    Mat v = random_mat(rng, n / 2 + 1, n);
    axb::OneInverseFamily fam(u * v);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(fam.sample(seed++));
}
BENCHMARK(BM_OneInverseSample)->Arg(4)->Arg(8);

void BM_StructuralCheck(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(19);
    Mat a = random_mat(rng, n, n);
    Mat x = random_mat(rng, n, n);
    Mat b = random_mat(rng, n, n);
    Mat c = a * x * b;
    for (auto _ : state)
        benchmark::DoNotOptimize(axb::structural_check(a, b, c));
}
BENCHMARK(BM_StructuralCheck)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();

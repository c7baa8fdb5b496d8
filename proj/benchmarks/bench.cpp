#include <benchmark/benchmark.h>

#include "uqp/braiding.hpp"
#include "uqp/builtins.hpp"
#include "uqp/symmetrizer.hpp"

static void BM_QBinom(benchmark::State& state) {
    for (auto _ : state) {
        auto b = uqp::q_binom(8, 4, 2);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_QBinom);

static void BM_SymmetrizerBlock(benchmark::State& state) {
    auto b2 = uqp::braiding_from_cartan(uqp::CartanData::b2());
    const int m = static_cast<int>(state.range(0));
    std::vector<int> mu{m / 2, m - m / 2};
    for (auto _ : state) {
        auto blk = uqp::symmetrizer_block(m, mu, b2);
        benchmark::DoNotOptimize(blk);
    }
}
BENCHMARK(BM_SymmetrizerBlock)->Arg(4)->Arg(5)->Arg(6);

static void BM_KernelRank(benchmark::State& state) {
    auto b2 = uqp::braiding_from_cartan(uqp::CartanData::b2());
    const int m = static_cast<int>(state.range(0));
    std::vector<int> mu{m / 2, m - m / 2};
    auto blk = uqp::symmetrizer_block(m, mu, b2);
    for (auto _ : state) {
        auto kr = uqp::laurent_rank_kernel(blk.matrix);
        benchmark::DoNotOptimize(kr);
    }
}
BENCHMARK(BM_KernelRank)->Arg(4)->Arg(6);

static void BM_NormalForm(benchmark::State& state) {
    const auto& p = uqp::builtin_presentation("b2");
    auto e1 = uqp::AlgebraElement::generator(p, "e1");
    auto e2 = uqp::AlgebraElement::generator(p, "e2");
    auto x = e2 * e2 * e1 + e1 * e2;
    for (auto _ : state) {
        auto y = x * x;
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_NormalForm);

BENCHMARK_MAIN();

// Compares the serial reference kernels against the blocked OpenMP versions
// on history sizes representative of the long N=20000 spatial-order runs.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "fracburgers/kernels.hpp"
#include "fracburgers/l1.hpp"
#include "fracburgers/problems.hpp"
#include "fracburgers/stepper.hpp"

namespace {

struct HistoryFixture {
    std::vector<double> weights;
    std::vector<double> rows;
    std::size_t stride;
    std::size_t entries;

    HistoryFixture(std::size_t entries_in, std::size_t nodes) : stride(nodes), entries(entries_in) {
        const fracburgers::L1Weights w(0.5, 1.0 / static_cast<double>(entries), entries);
        weights.assign(w.coefficients().begin(), w.coefficients().end());
        rows.resize(entries * stride);
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (double& v : rows) {
            v = dist(rng);
        }
    }
};

void bm_l1_combine_reference(benchmark::State& state) {
    const HistoryFixture fx(static_cast<std::size_t>(state.range(0)),
                            static_cast<std::size_t>(state.range(1)));
    std::vector<double> out(fx.stride);
    for (auto _ : state) {
        fracburgers::kernels::l1_explicit_combine_reference(fx.weights, fx.rows.data(), fx.stride,
                                                            fx.entries, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(fx.entries * fx.stride * sizeof(double)));
}

void bm_l1_combine_blocked(benchmark::State& state) {
    const HistoryFixture fx(static_cast<std::size_t>(state.range(0)),
                            static_cast<std::size_t>(state.range(1)));
    std::vector<double> out(fx.stride);
    for (auto _ : state) {
        fracburgers::kernels::l1_explicit_combine(fx.weights, fx.rows.data(), fx.stride,
                                                  fx.entries, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(fx.entries * fx.stride * sizeof(double)));
}

void bm_solve_example1(benchmark::State& state) {
    const auto problem = fracburgers::example1(0.5, 1.0, 1.0, 1.0);
    const auto grid = fracburgers::make_grid(problem.length, 40);
    const fracburgers::TimeMesh tmesh(problem.horizon, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = fracburgers::solve(problem, grid, tmesh);
        benchmark::DoNotOptimize(result.final_u.values().data());
    }
}

}  // namespace

BENCHMARK(bm_l1_combine_reference)
    ->ArgsProduct({{2048, 8192, 20000}, {33, 257}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_l1_combine_blocked)
    ->ArgsProduct({{2048, 8192, 20000}, {33, 257}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_solve_example1)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

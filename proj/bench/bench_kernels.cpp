// Serial reference kernels against their parallel counterparts.

#include <benchmark/benchmark.h>

#include "anyon/genfunc.hpp"
#include "anyon/kernels.hpp"
#include "anyon/pathcount.hpp"

using namespace anyon;

namespace {

void path_steps(benchmark::State& state, Execution exec) {
    const Lattice lattice(static_cast<int>(state.range(0)));
    // Large entries so the additions cost something.
    std::vector<BigInt> prev(lattice.size(), BigInt("123456789012345678901234567890")), next(lattice.size());
    for (auto _ : state) {
        kernels::path_step(exec, lattice, prev, next);
        benchmark::DoNotOptimize(next.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * lattice.size()));
}

void BM_PathStepSerial(benchmark::State& s) { path_steps(s, Execution::serial); }
void BM_PathStepOmp(benchmark::State& s) { path_steps(s, Execution::parallel); }
BENCHMARK(BM_PathStepSerial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_PathStepOmp)->Arg(16)->Arg(32)->Arg(64);

void BM_BareissReference(benchmark::State& state) {
    const auto f = build_system(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::bareiss_reference(f, f.rows()).determinant());
}
void BM_BareissBandedSerial(benchmark::State& state) {
    const auto f = build_system(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::bareiss_banded(f, f.rows(), Execution::serial).determinant());
}
void BM_BareissBandedParallel(benchmark::State& state) {
    const auto f = build_system(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::bareiss_banded(f, f.rows(), Execution::parallel).determinant());
}
BENCHMARK(BM_BareissReference)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissBandedSerial)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissBandedParallel)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_TableSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(table(8, static_cast<int>(state.range(0)), {0, 0}, Execution::serial));
}
void BM_TableParallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(table(8, static_cast<int>(state.range(0)), {0, 0}, Execution::parallel));
}
BENCHMARK(BM_TableSerial)->Arg(27)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(27)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

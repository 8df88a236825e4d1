#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "eigenfloor/eigen_oracle.hpp"
#include "eigenfloor/matrix_io.hpp"
#include "eigenfloor/sweep.hpp"
#include "eigenfloor/traces.hpp"

using namespace eigenfloor;

namespace {

std::vector<TracePair> make_pairs(std::size_t n) {
    std::vector<TracePair> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Spectrum s = random_spd_spectrum(2 + static_cast<int>(i % 40), mix_seed(7, i));
        pairs.push_back(spectrum_to_tracepair(s));
    }
    return pairs;
}

LowerBidiagonal dominant_bidiagonal(std::size_t m) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> diag(1.0, 2.0);
    std::uniform_real_distribution<double> sub(0.1, 0.9);
    std::vector<double> d(m), s(m - 1);
    for (double& x : d) x = diag(rng);
    for (double& x : s) x = sub(rng);
    return LowerBidiagonal(std::move(d), std::move(s));
}

void BM_SweepRows(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep_rows(5, state.range(0), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepRowsSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep_rows_serial(5, state.range(0), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BoundReports(benchmark::State& state) {
    const auto pairs = make_pairs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bound_reports(pairs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BoundReportsSerial(benchmark::State& state) {
    const auto pairs = make_pairs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bound_reports_serial(pairs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FullSpectrum(benchmark::State& state) {
    const SymTridiagonal t = bidiagonal_gram(random_bidiagonal(static_cast<std::size_t>(state.range(0)), 3));
    for (auto _ : state) benchmark::DoNotOptimize(full_spectrum(t, 0.0));
}

void BM_FullSpectrumSerial(benchmark::State& state) {
    const SymTridiagonal t = bidiagonal_gram(random_bidiagonal(static_cast<std::size_t>(state.range(0)), 3));
    for (auto _ : state) benchmark::DoNotOptimize(full_spectrum_serial(t, 0.0));
}

void BM_SingularValues(benchmark::State& state) {
    const LowerBidiagonal b = random_bidiagonal(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(bidiagonal_singular_values(b, 0.0));
}

void BM_SingularValuesSerial(benchmark::State& state) {
    const LowerBidiagonal b = random_bidiagonal(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(bidiagonal_singular_values_serial(b, 0.0));
}

void BM_TracesFast(benchmark::State& state) {
    const LowerBidiagonal b = dominant_bidiagonal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(traces_fast(b));
    state.SetComplexityN(state.range(0));
}

void BM_TracesOracle(benchmark::State& state) {
    const LowerBidiagonal b = dominant_bidiagonal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(traces_oracle(b));
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepRows)->Arg(10000)->Arg(100000);
BENCHMARK(BM_SweepRowsSerial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_BoundReports)->Arg(100000);
BENCHMARK(BM_BoundReportsSerial)->Arg(100000);
BENCHMARK(BM_FullSpectrum)->Arg(200)->Arg(1000);
BENCHMARK(BM_FullSpectrumSerial)->Arg(200)->Arg(1000);
BENCHMARK(BM_SingularValues)->Arg(200)->Arg(1000);
BENCHMARK(BM_SingularValuesSerial)->Arg(200)->Arg(1000);
BENCHMARK(BM_TracesFast)->RangeMultiplier(10)->Range(100, 1000000)->Complexity(benchmark::oN);
BENCHMARK(BM_TracesOracle)->RangeMultiplier(10)->Range(100, 10000)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();

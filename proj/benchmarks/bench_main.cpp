#include <benchmark/benchmark.h>

#include "qgamble/born.hpp"
#include "qgamble/coloring.hpp"
#include "qgamble/fixtures.hpp"
#include "qgamble/lp.hpp"
#include "qgamble/realization.hpp"

namespace {

using namespace qgamble;

void BM_SimplexUncertainty(benchmark::State& state) {
    const Fixture f = uncertainty13_gamble();
    const ConstraintSystem cs = constraints_from_gamble(f.gamble);
    for (auto _ : state) benchmark::DoNotOptimize(optimize(cs, f.functionals.at("U"), Direction::Maximize));
}
BENCHMARK(BM_SimplexUncertainty);

void BM_SimplexGhzPinned(benchmark::State& state) {
    const Fixture f = ghz_mermin_gamble();
    const auto ids = derived_identities(f.gamble, f.realization);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bound_with_certainty(f.gamble, {EventId("S")}, f.functionals.at("P16"), Direction::Maximize, ids));
    }
}
BENCHMARK(BM_SimplexGhzPinned);

void BM_ColoringKernaghan(benchmark::State& state) {
    const Gamble g = kernaghan20_gamble().gamble;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(g));
}
BENCHMARK(BM_ColoringKernaghan);

void BM_ParityCertificateKernaghan(benchmark::State& state) {
    const Gamble g = kernaghan20_gamble().gamble;
    for (auto _ : state) benchmark::DoNotOptimize(parity_certificate(g));
}
BENCHMARK(BM_ParityCertificateKernaghan);

void BM_VerifyGhz(benchmark::State& state) {
    const Fixture f = ghz_mermin_gamble();
    for (auto _ : state) benchmark::DoNotOptimize(verify_realization(f.gamble, f.realization));
}
BENCHMARK(BM_VerifyGhz)->Unit(benchmark::kMillisecond);

void BM_BornGhz(benchmark::State& state) {
    const Fixture f = ghz_mermin_gamble();
    const State& ghz = f.states.at("GHZ");
    for (auto _ : state) {
        for (const auto& e : f.gamble.universe()) benchmark::DoNotOptimize(born(ghz, f.realization.at(e)));
    }
}
BENCHMARK(BM_BornGhz);

void BM_ClassicalGhz(benchmark::State& state) {
    const Fixture f = ghz_mermin_gamble();
    for (auto _ : state) benchmark::DoNotOptimize(classical_max(*f.scheme, f.functionals.at("P16")));
}
BENCHMARK(BM_ClassicalGhz);

} // namespace
BENCHMARK_MAIN();

#include <numbers>

#include <benchmark/benchmark.h>

#include "pwclock/clock_experiment.hpp"
#include "pwclock/quantum_state.hpp"
#include "pwclock/weylheis_algebra.hpp"

namespace {

using namespace pwclock;

void BM_MakeDft(benchmark::State& state) {
    const auto dim = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_dft(dim));
    }
}
BENCHMARK(BM_MakeDft)->Arg(4)->Arg(16)->Arg(64);

void BM_OperatorPower(benchmark::State& state) {
    const auto f = make_dft(static_cast<Index>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(operator_power(f, 63));
    }
}
BENCHMARK(BM_OperatorPower)->Arg(4)->Arg(16)->Arg(64);

void BM_Apply(benchmark::State& state) {
    const auto dim = static_cast<Index>(state.range(0));
    const auto f = make_dft(dim);
    PureState psi = PureState::basis_state(dim, 0);
    for (auto _ : state) {
        psi = apply(f, psi);
        benchmark::DoNotOptimize(psi);
    }
}
BENCHMARK(BM_Apply)->Arg(4)->Arg(16)->Arg(64);

void BM_RunClock(benchmark::State& state) {
    const auto f = make_dft(4);
    const ClockInitParams init{0.2 * std::numbers::pi};
    const auto psi0 = initial_state(init);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_clock(f, psi0, static_cast<int>(state.range(0)),
                                           "dft", init));
    }
}
BENCHMARK(BM_RunClock)->Arg(32)->Arg(256);

void BM_BuildUPhiStrict(benchmark::State& state) {
    const auto phi = quadratic_phase(static_cast<Index>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_u_phi(phi, UPhiMode::Strict));
    }
}
BENCHMARK(BM_BuildUPhiStrict)->Arg(4)->Arg(16);

void BM_BuildUPhiPolar(benchmark::State& state) {
    const auto phi = PhaseMatrix::zero(static_cast<Index>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_u_phi(phi, UPhiMode::Polar));
    }
}
BENCHMARK(BM_BuildUPhiPolar)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();

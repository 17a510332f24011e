#include <benchmark/benchmark.h>

#include "symplecta/kernels.hpp"
#include "symplecta/random.hpp"

using namespace symplecta;

namespace {

template <bool Parallel>
void BM_ClassicalSamples(benchmark::State& state) {
    sampling::Rng rng(sampling::kDefaultSeed);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto net = sampling::random_stable_network(rng, n);
    const auto modes = decompose(net);
    const auto x0 = sampling::random_phase_state(rng, n);
    const auto times = sample_times(100.0, 0.01);
    for (auto _ : state) {
        auto out = Parallel ? kernels::omp::classical_samples(modes, x0, times)
                            : kernels::serial::classical_samples(modes, x0, times);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(times.size()));
}

template <bool Parallel>
void BM_QuantumSamples(benchmark::State& state) {
    sampling::Rng rng(sampling::kDefaultSeed);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto modes = quantum_normal_modes(sampling::random_quantum_network(rng, n));
    const auto c0 = SingleExcitationState::site(n, 0);
    const auto times = sample_times(100.0, 0.01);
    for (auto _ : state) {
        auto out = Parallel ? kernels::omp::quantum_samples(modes, c0.amps(), times)
                            : kernels::serial::quantum_samples(modes, c0.amps(), times);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(times.size()));
}

void BM_Decompose(benchmark::State& state) {
    sampling::Rng rng(sampling::kDefaultSeed);
    const auto net = sampling::random_stable_network(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decompose(net).omegas.data());
}

}  // namespace

BENCHMARK(BM_ClassicalSamples<false>)->Arg(2)->Arg(8)->Arg(32);
BENCHMARK(BM_ClassicalSamples<true>)->Arg(2)->Arg(8)->Arg(32);
BENCHMARK(BM_QuantumSamples<false>)->Arg(2)->Arg(8)->Arg(32);
BENCHMARK(BM_QuantumSamples<true>)->Arg(2)->Arg(8)->Arg(32);
BENCHMARK(BM_Decompose)->Arg(2)->Arg(8)->Arg(32)->Arg(64);

BENCHMARK_MAIN();

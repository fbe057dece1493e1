#include <random>

#include <benchmark/benchmark.h>

#include "bethevqe/ansatz.hpp"
#include "bethevqe/bethe.hpp"
#include "bethevqe/bethe_roots.hpp"
#include "bethevqe/pauli.hpp"
#include "bethevqe/sampling.hpp"
#include "bethevqe/simulator.hpp"
#include "bethevqe/xxz.hpp"

using namespace bethevqe;

namespace {

Statevector random_state(int n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  for (auto& x : a) x = Complex(g(rng), g(rng));
  return Statevector(n, std::move(a)).normalized();
}

void BM_ApplyU3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = random_state(n);
  const auto g = Gate::u3(n / 2, 0.3, 0.2, 0.1);
  for (auto _ : state) {
    s = apply_gate(s, g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ApplyU3)->Arg(10)->Arg(16)->Arg(20);

void BM_ApplyCnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = random_state(n);
  const auto g = Gate::cnot(n - 1, 0);
  for (auto _ : state) {
    s = apply_gate(s, g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ApplyCnot)->Arg(10)->Arg(16)->Arg(20);

void BM_HamiltonianExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = random_state(n);
  const auto h = build_hamiltonian({n, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(expectation(s, h));
}
BENCHMARK(BM_HamiltonianExpectation)->Arg(4)->Arg(12)->Arg(18);

void BM_SampledEnergyN4(benchmark::State& state) {
  const auto s = run_circuit(one_magnon_circuit_n4(0.2), Statevector(4));
  const auto h = build_hamiltonian({4, 1.0});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_energy_sampled(s, h, 8192, seed++));
}
BENCHMARK(BM_SampledEnergyN4);

void BM_MonodromyCreation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = random_state(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_monodromy_block(MonodromyBlock::B, 0.3, 1.0, s));
  }
}
BENCHMARK(BM_MonodromyCreation)->Arg(8)->Arg(14);

void BM_BetheSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto qn = default_quantum_numbers(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_bethe_real(n, n / 2, 1.0, qn));
}
BENCHMARK(BM_BetheSolve)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ExactSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_spectrum({n, 1.0}));
}
BENCHMARK(BM_ExactSpectrum)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "divaudit/audit.hpp"
#include "divaudit/cauchy.hpp"
#include "divaudit/divergences.hpp"

namespace {

using namespace divaudit;

void BM_jsd_binary(benchmark::State& state) {
  const auto p = binary_point(0.3);
  const auto q = binary_point(0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jsd(p, q).value);
  }
}
BENCHMARK(BM_jsd_binary);

void BM_f_div_cauchy(benchmark::State& state) {
  const auto gen = generator_js();
  const auto a = make_cauchy(0.0, 1.0);
  const auto b = make_cauchy(1.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_div_cauchy(gen, a, b));
  }
}
BENCHMARK(BM_f_div_cauchy);

void BM_f_div_cauchy_oracle(benchmark::State& state) {
  const auto gen = generator_js();
  const auto a = make_cauchy(0.0, 1.0);
  const auto b = make_cauchy(1.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_div_cauchy_oracle(gen, a, b));
  }
}
BENCHMARK(BM_f_div_cauchy_oracle);

void BM_F_grid_sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double best = -1.0;
    for (int i = 1; i <= n; ++i) {
      best = std::max(best, F_multinomial(0.6, 0.49 * i / (n + 1.0)));
    }
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_F_grid_sweep)->Arg(256)->Arg(4096);

void BM_find_jsd_violation(benchmark::State& state) {
  const auto cfg = default_multinomial_search();
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_jsd_violation(0.6, cfg, 2).margin);
  }
}
BENCHMARK(BM_find_jsd_violation);

void BM_random_audit(benchmark::State& state) {
  auto measure = [](const Multinomial& a, const Multinomial& b) {
    return jsd(a, b).value;
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        random_audit(measure, 0.5, static_cast<std::uint64_t>(state.range(0)), 7)
            .violations);
  }
}
BENCHMARK(BM_random_audit)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();

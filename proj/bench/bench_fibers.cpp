// Serial reference kernel against the OpenMP kernel on the same maps.

#include <benchmark/benchmark.h>

#include "cayley/commands.hpp"
#include "cayley/fiber_kernels.hpp"

namespace {

void run(benchmark::State& state, const char* map, uint64_t p, bool parallel) {
  const cay::MapCandidate c = cay::cli::builtin_map(map, p);
  for (auto _ : state) {
    auto h = parallel ? cay::fiber_histogram_parallel(c) : cay::fiber_histogram_serial(c);
    benchmark::DoNotOptimize(h.nonempty_fibers);
  }
  state.counters["workers"] = parallel ? cay::fiber_worker_count() : 1;
}

void BM_g2_serial(benchmark::State& s) { run(s, "g2", 211, false); }
void BM_g2_parallel(benchmark::State& s) { run(s, "g2", 211, true); }
void BM_sl3_serial(benchmark::State& s) { run(s, "sl3", 211, false); }
void BM_sl3_parallel(benchmark::State& s) { run(s, "sl3", 211, true); }
void BM_product_serial(benchmark::State& s) { run(s, "product:sl2-sq-isogeny,pgl2", 101, false); }
void BM_product_parallel(benchmark::State& s) { run(s, "product:sl2-sq-isogeny,pgl2", 101, true); }

}  // namespace

BENCHMARK(BM_g2_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_g2_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sl3_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sl3_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_product_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_product_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

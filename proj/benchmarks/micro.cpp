#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "rvsym/concrete.hpp"
#include "rvsym/explorer.hpp"

namespace {

using namespace rvsym;

std::vector<uint8_t> guest(const std::string& name) {
  return read_file(std::filesystem::path(RVSYM_GUEST_BIN_DIR) / (name + ".elf"));
}

void BM_Decode(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<uint32_t> words;
  while (words.size() < 4096) {
    const uint32_t w = rng() | 3;
    try {
      decode(w);
      words.push_back(w);
    } catch (const IllegalInstruction&) {
    }
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(words[i++ & 4095]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Decode);

void BM_EvalConcrete(benchmark::State& state) {
  using E = Expr<uint32_t>;
  E e = E::make_leaf(0x12345678);
  for (int i = 0; i < 16; ++i) {
    e = E::binary(i % 2 ? ExprKind::kMul : ExprKind::kXor, e, E::from_int(kWord, 0x9E3779B9u + i));
  }
  for (auto _ : state) benchmark::DoNotOptimize(eval_concrete(e));
}
BENCHMARK(BM_EvalConcrete);

void BM_ConcreteRun(benchmark::State& state) {
  const LoadedImage image = load_elf_image(guest("sieve"));
  uint64_t steps = 0;
  for (auto _ : state) {
    const auto r = run_concrete(image.concrete_state());
    steps += r.steps;
  }
  state.counters["instr/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ConcreteRun)->Unit(benchmark::kMillisecond);

void BM_ConcolicSeedRun(benchmark::State& state) {
  Session session;
  Engine engine(load_elf_image(guest("bubble_sort_n6")), session);
  for (auto _ : state) benchmark::DoNotOptimize(engine.run().steps);
}
BENCHMARK(BM_ConcolicSeedRun)->Unit(benchmark::kMicrosecond);

void BM_Explore(benchmark::State& state) {
  const auto elf = guest("bubble_sort_n" + std::to_string(state.range(0)));
  uint64_t paths = 0;
  for (auto _ : state) {
    Session session;
    paths = explore(elf, session).paths_completed;
  }
  state.counters["paths"] = static_cast<double>(paths);
}
BENCHMARK(BM_Explore)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

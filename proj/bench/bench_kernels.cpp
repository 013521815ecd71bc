#include <benchmark/benchmark.h>

#include "loom/loop_embed.hpp"
#include "loom/path_crystal.hpp"

namespace {

using namespace loom;

void tensor_generation(benchmark::State& state, Execution execution) {
  const CartanData cd = CartanData::build("A", 2);
  const PathKind kind(cd);
  const auto b = fundamental_crystal(kind, 1);
  const TensorKind t = TensorKind::power(b.graph, static_cast<int>(state.range(0)));
  GenerateOptions opt;
  opt.execution = execution;
  for (auto _ : state) benchmark::DoNotOptimize(generate(t, t.seed(), opt).graph.size());
}

void path_generation(benchmark::State& state, Execution execution) {
  const CartanData cd = CartanData::build("A", 1);
  const PathKind kind(cd);
  GenerateOptions opt;
  opt.execution = execution;
  opt.window = 3;
  const Path seed = Path::linear(cd.classical_fundamental(1, Ambient::Affine) * Rational(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(generate(kind, seed, opt).graph.size());
}

void psi_images(benchmark::State& state, Execution execution) {
  const CartanData cd = CartanData::build("A", 2);
  LoopEmbedding emb(cd, 1, static_cast<int>(state.range(0)));
  const auto xs = emb.window_elements(3);
  for (auto _ : state) benchmark::DoNotOptimize(emb.psi_all(xs, execution).size());
}

}  // namespace

BENCHMARK_CAPTURE(tensor_generation, serial, Execution::Serial)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(tensor_generation, parallel, Execution::Parallel)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(path_generation, serial, Execution::Serial)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(path_generation, parallel, Execution::Parallel)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(psi_images, serial, Execution::Serial)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(psi_images, parallel, Execution::Parallel)->Arg(2)->Arg(3);

BENCHMARK_MAIN();

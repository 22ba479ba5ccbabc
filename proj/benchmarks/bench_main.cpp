#include <benchmark/benchmark.h>

#include <random>

#include "racg/classifier.hpp"
#include "racg/filter.hpp"
#include "racg/io.hpp"
#include "racg/oracle.hpp"
#include "racg/separators.hpp"

namespace {

using namespace racg;

Word random_word(const PresentationGraph& g, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Word w(length);
  for (Letter& s : w) s = static_cast<Letter>(rng() % static_cast<std::uint64_t>(g.size()));
  return w;
}

void BM_NormalForm(benchmark::State& state) {
  const PresentationGraph g = fixture("G7");
  const Word w = random_word(g, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(g, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormalForm)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_Ball(benchmark::State& state) {
  const PresentationGraph g = fixture("C6");
  for (auto _ : state) benchmark::DoNotOptimize(ball(g, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_Ball)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_FindVfs(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const int n = static_cast<int>(state.range(0));
  const int pairs = n * (n - 1) / 2;
  const PresentationGraph g = graph_from_code(n, rng() & ((std::uint64_t{1} << pairs) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(find_vfs(g));
}
BENCHMARK(BM_FindVfs)->DenseRange(5, 9, 2);

void BM_BuildFilter(benchmark::State& state) {
  const PresentationGraph g = fixture("C5");
  const Letter a = g.index_of("a"), c = g.index_of("c"), d = g.index_of("d");
  const int depth = static_cast<int>(state.range(0));
  Word alpha, beta;
  for (int i = 0; i <= depth; ++i) {
    alpha.push_back(i % 2 == 0 ? a : c);
    beta.push_back(i % 2 == 0 ? a : d);
  }
  for (auto _ : state) benchmark::DoNotOptimize(build_filter(g, alpha, beta, depth).vertices.size());
}
BENCHMARK(BM_BuildFilter)->DenseRange(3, 12, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

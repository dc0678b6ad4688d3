#include <bipart/dimension.hpp>
#include <bipart/embedding.hpp>
#include <bipart/equalizer.hpp>
#include <bipart/factorization.hpp>
#include <bipart/serialization.hpp>

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

namespace {

using namespace bipart;

BipartitionMatrix loadFixture(const char* name) {
  std::ifstream in(std::string(BIPART_FIXTURE_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return parseMatrix(text.str());
}

const char* const kGoldens[] = {"example3.json", "example22.json", "matrix5x5.json",
                                "modified4x4.json", "appendixB.json"};

/// (1|2|...|r) / (0|0|...|0): every divider subset equalizes.
BipartitionMatrix openEntry(Element r) {
  std::vector<OrderedSet> num;
  for (Element k = 1; k <= r; ++k) num.push_back({k});
  return BipartitionMatrix(Bipartition(Partition(num), Partition::null(r)));
}

/// (1|2|...|r) / (r+1|...|2r)
Bipartition staircase(Element r) {
  std::vector<OrderedSet> in;
  std::vector<OrderedSet> out;
  for (Element k = 1; k <= r; ++k) {
    in.push_back({k});
    out.push_back({r + k});
  }
  return Bipartition(Partition(in), Partition(out));
}

// A fresh engine per iteration, so memoization never crosses iterations.
void BM_GoldenDimension(benchmark::State& state) {
  const BipartitionMatrix m = loadFixture(kGoldens[state.range(0)]);
  for (auto _ : state) {
    DimensionEngine engine;
    benchmark::DoNotOptimize(engine.dimension(m));
  }
  state.SetLabel(kGoldens[state.range(0)]);
}
BENCHMARK(BM_GoldenDimension)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_IndecomposableFactorization(benchmark::State& state) {
  const BipartitionMatrix m = loadFixture(kGoldens[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(indecomposableFactorization(m));
  state.SetLabel(kGoldens[state.range(0)]);
}
BENCHMARK(BM_IndecomposableFactorization)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_MaximalEqualizer(benchmark::State& state) {
  const BipartitionMatrix m = loadFixture("example22.json");
  for (auto _ : state) benchmark::DoNotOptimize(maximalEqualizer(m));
}
BENCHMARK(BM_MaximalEqualizer)->Unit(benchmark::kMicrosecond);

// Enumeration cost grows as 2^(r-1) for a single open entry.
void BM_EqualizersOfOpenEntry(benchmark::State& state) {
  const BipartitionMatrix m = openEntry(static_cast<Element>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(equalizers(m));
}
BENCHMARK(BM_EqualizersOfOpenEntry)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_FactorElementary(benchmark::State& state) {
  const Bipartition b = staircase(static_cast<Element>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factorElementary(b));
}
BENCHMARK(BM_FactorElementary)->RangeMultiplier(2)->Range(2, 32);

void BM_MultiplyRoundTrip(benchmark::State& state) {
  const FormalProduct p = factorElementary(staircase(static_cast<Element>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(p));
}
BENCHMARK(BM_MultiplyRoundTrip)->RangeMultiplier(2)->Range(2, 32);

void BM_EmbeddingPartition(benchmark::State& state) {
  const auto n = static_cast<Element>(state.range(0));
  std::vector<Element> evens;
  for (Element x = 2; x <= n; x += 2) evens.push_back(x);
  const OrderedSet superset = OrderedSet::interval(1, n);
  const OrderedSet subset(std::move(evens));
  for (auto _ : state) benchmark::DoNotOptimize(embeddingPartition(superset, subset));
}
BENCHMARK(BM_EmbeddingPartition)->RangeMultiplier(8)->Range(8, 4096);

void BM_ParseEmit(benchmark::State& state) {
  const std::string text = emitMatrix(loadFixture("matrix5x5.json"));
  for (auto _ : state) benchmark::DoNotOptimize(emitMatrix(parseMatrix(text)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseEmit);

}  // namespace

BENCHMARK_MAIN();

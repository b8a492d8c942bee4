// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "lexshift/conllu.hpp"
#include "lexshift/stats.hpp"
#include "lexshift/transforms.hpp"
#include "synthetic.hpp"

namespace {

using namespace lexshift;

const Corpus& gum_like() {
  static const Corpus corpus = testing::make_gum_like_corpus();
  return corpus;
}

TransformConfig bench_config() {
  TransformConfig cfg = TransformConfig::defaults();
  cfg.master_seed = 1;
  cfg.emoji.placement.model = PlacementModel{0.85, 0.15, 100};
  cfg.x.hashtag_placement.model = PlacementModel{0.6, 0.25, 100};
  return cfg;
}

void BM_ParseConllu(benchmark::State& state) {
  const std::string text = serialize_conllu(gum_like());
  for (auto _ : state) benchmark::DoNotOptimize(parse_conllu(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseConllu)->Unit(benchmark::kMillisecond);

void BM_SerializeConllu(benchmark::State& state) {
  const Corpus& corpus = gum_like();
  for (auto _ : state) {
    benchmark::DoNotOptimize(serialize_conllu(corpus, SerializeOptions{.provenance = true}));
  }
}
BENCHMARK(BM_SerializeConllu)->Unit(benchmark::kMillisecond);

void BM_TransformAll(benchmark::State& state) {
  const Corpus& corpus = gum_like();
  const NormalizationDictionary dict = testing::make_dictionary();
  const TransformConfig cfg = bench_config();
  const ExecutionOptions exec{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(transform_all(corpus, cfg, &dict, exec));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * corpus.token_count()));
}
BENCHMARK(BM_TransformAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RestoreOriginal(benchmark::State& state) {
  const NormalizationDictionary dict = testing::make_dictionary();
  const Corpus transformed = transform_all(gum_like(), bench_config(), &dict);
  for (auto _ : state) benchmark::DoNotOptimize(restore_original(transformed));
}
BENCHMARK(BM_RestoreOriginal)->Unit(benchmark::kMillisecond);

void BM_FeatureRateReport(benchmark::State& state) {
  const Corpus target = testing::make_target_corpus(6917, 3);
  for (auto _ : state) benchmark::DoNotOptimize(feature_rate_report(target));
}
BENCHMARK(BM_FeatureRateReport)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

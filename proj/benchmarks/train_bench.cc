#include <benchmark/benchmark.h>

#include "parasense/inference.h"
#include "parasense/sticks.h"
#include "parasense/synth.h"
#include "parasense/trainer.h"

namespace ps = parasense;

namespace {

ps::SenseModel random_model(std::uint32_t dim, std::uint32_t t_max) {
  ps::TrainConfig c;
  c.dim = dim;
  c.t_max = t_max;
  std::vector<ps::EnglishEntry> en;
  for (int i = 0; i < 64; ++i) en.push_back({"w" + std::to_string(i), 10});
  auto m = ps::init_model(ps::Vocabulary({}, std::move(en), {}), c);
  ps::Rng rng(3);
  for (auto& v : m.ctx_en.data_mutable()) v = rng.uniform(-0.1, 0.1);
  return m;
}

void BM_ExpectedLogPrior(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  std::vector<double> counts(t, 1.5), out(t);
  for (auto _ : state) {
    ps::expected_log_prior(counts, 0.1, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ExpectedLogPrior)->Arg(5)->Arg(10)->Arg(30);

// Prior plus eight context scores and the softmax, as for one occurrence.
void BM_EStep(benchmark::State& state) {
  const auto m = random_model(static_cast<std::uint32_t>(state.range(0)), 10);
  std::vector<double> z(10);
  for (auto _ : state) {
    ps::expected_log_prior(m.sticks.row(0), 0.1, z);
    for (ps::WordId y = 1; y <= 8; ++y) {
      ps::sense_update(z, m, 0, {ps::Side::kEnglish, y});
    }
    ps::renormalize_inplace(z);
    benchmark::DoNotOptimize(z.data());
  }
}
BENCHMARK(BM_EStep)->Arg(50)->Arg(100)->Arg(300);

void BM_ThetaStep(benchmark::State& state) {
  auto m = random_model(100, 10);
  std::vector<double> z(10, 0.0);
  for (std::int64_t k = 0; k < state.range(0); ++k) z[k] = 1.0 / state.range(0);
  const std::vector<ps::WordId> negs{10, 20, 30, 40, 50};
  ps::UpdateScratch scratch;
  for (auto _ : state) {
    ps::gradient_step_theta(m, 0, z, {ps::Side::kEnglish, 1}, negs, 1e-6, scratch);
  }
  state.SetLabel(std::to_string(state.range(0)) + " senses above threshold");
}
BENCHMARK(BM_ThetaStep)->Arg(1)->Arg(3)->Arg(10);

void BM_TrainEpoch(benchmark::State& state) {
  auto spec = ps::default_synth_spec({{"f1", true}, {"f2", false}}, 1);
  spec.pairs = 2000;
  const auto data = ps::generate_synthetic(spec);
  std::vector<ps::AlignedSentencePair> pairs = data.corpora[0].pairs;
  pairs.insert(pairs.end(), data.corpora[1].pairs.begin(),
               data.corpora[1].pairs.end());
  ps::TrainConfig cfg;
  cfg.iterations = 1;
  cfg.variant = static_cast<ps::Variant>(state.range(0));
  std::uint64_t tokens = 0;
  for (auto _ : state) {
    auto model = ps::train(pairs, cfg);
    tokens += model.state.tokens_processed;
    benchmark::DoNotOptimize(model.in_en.data().data());
  }
  state.counters["tokens/s"] =
      benchmark::Counter(static_cast<double>(tokens), benchmark::Counter::kIsRate);
  state.SetLabel(std::string(ps::to_string(cfg.variant)));
}
BENCHMARK(BM_TrainEpoch)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

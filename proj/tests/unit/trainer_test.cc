#include "parasense/trainer.h"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <sstream>

#include "parasense/synth.h"

namespace parasense {
namespace {

std::vector<AlignedSentencePair> small_corpus(std::uint64_t seed = 3) {
  SynthSpec spec;
  spec.planted = make_planted_words(1, 2, 6);
  spec.languages = {{"fr", false}};
  spec.filler_vocab = 20;
  spec.pairs = 150;
  spec.sentence_length = 6;
  spec.wsi_instances = 4;
  spec.seed = seed;
  return generate_synthetic(spec).corpora[0].pairs;
}

TrainConfig small_config() {
  TrainConfig c;
  c.dim = 8;
  c.t_max = 4;
  c.iterations = 2;
  c.min_count = 1;
  c.seed = 11;
  return c;
}

TEST(EncodePair, DropsUnknownTokensAndRemapsAlignments) {
  AlignedSentencePair p;
  p.en = {{"a", "en"}, {"zz", "en"}, {"b", "en"}};
  p.fg = {{"yy", "fr"}, {"x", "fr"}, {"y", "fr"}};
  p.a_ef = {1, 0, 2};
  p.a_fe = {1, 0, 2};
  p.lang = "fr";
  const Vocabulary v({"fr"}, {{"a", 3}, {"b", 3}}, {{"x", 0, 3}, {"y", 0, 3}});
  const auto e = encode_pair(p, v, Variant::kFull);
  EXPECT_EQ(e.en, (std::vector<WordId>{*v.en_id("a"), *v.en_id("b")}));
  EXPECT_EQ(e.fg, (std::vector<WordId>{*v.fg_id("x", "fr"), *v.fg_id("y", "fr")}));
  EXPECT_EQ(e.a_ef, (std::vector<std::int32_t>{0, 1}));
  EXPECT_EQ(e.a_fe, (std::vector<std::int32_t>{0, 1}));
}

TEST(EncodePair, MonoDropsForeignSide) {
  AlignedSentencePair p;
  p.en = {{"a", "en"}};
  p.fg = {{"x", "fr"}};
  p.a_ef = {0};
  p.a_fe = {0};
  p.lang = "fr";
  const Vocabulary v({"fr"}, {{"a", 3}}, {{"x", 0, 3}});
  const auto e = encode_pair(p, v, Variant::kMono);
  EXPECT_TRUE(e.fg.empty());
  EXPECT_EQ(e.a_ef, (std::vector<std::int32_t>{kUnaligned}));
}

TEST(Train, PosteriorsAreNormalized) {
  const auto pairs = small_corpus();
  TrainOptions opt;
  std::size_t seen = 0;
  opt.hooks.on_posterior = [&](WordId, std::span<const double> q) {
    ++seen;
    ASSERT_NEAR(std::accumulate(q.begin(), q.end(), 0.0), 1.0, 1e-9);
    for (double v : q) ASSERT_GE(v, 0.0);
  };
  const auto m = train(pairs, small_config(), opt);
  EXPECT_EQ(seen, 2 * m.vocab.n_e());
}

TEST(Train, GatedSensesAreBitwiseUnchanged) {
  const auto pairs = small_corpus();
  const auto config = small_config();
  VocabularyBuilder b;
  for (const auto& p : pairs) {
    for (const auto& t : p.en) b.add_english(t.surface);
    for (const auto& t : p.fg) b.add_foreign(t.surface, t.lang);
  }
  SenseModel model = init_model(b.build(config.min_count), config);
  const auto corpus = encode_corpus(pairs, model.vocab, config.variant);

  std::vector<Real> snapshot;
  std::size_t gated = 0;
  TrainOptions opt;
  opt.hooks.on_posterior = [&](WordId w, std::span<const double>) {
    const auto rows = std::span(model.in_en.data())
                          .subspan(w * config.t_max * config.dim,
                                   config.t_max * config.dim);
    snapshot.assign(rows.begin(), rows.end());
  };
  opt.hooks.after_update = [&](WordId w, std::span<const double> q) {
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k] > config.epsilon) continue;
      ++gated;
      const auto row = model.sense(w, k);
      for (std::size_t i = 0; i < row.size(); ++i) {
        ASSERT_EQ(row[i], snapshot[k * config.dim + i]);
      }
    }
  };
  Trainer(model, corpus, opt).run();
  EXPECT_GT(gated, 0u);
}

TEST(Train, StickTotalsCountOccurrencesAndNeverDecrease) {
  const auto pairs = small_corpus();
  const auto config = small_config();
  std::map<WordId, std::vector<double>> last;
  TrainOptions opt;
  SenseModel* live = nullptr;
  // Capture the stick row before each update through the posterior hook.
  opt.hooks.on_posterior = [&](WordId w, std::span<const double>) {
    if (!live) return;
    auto row = live->sticks.row(w);
    auto& prev = last[w];
    if (!prev.empty()) {
      for (std::size_t k = 0; k < row.size(); ++k) ASSERT_GE(row[k], prev[k]);
    }
    prev.assign(row.begin(), row.end());
  };
  VocabularyBuilder b;
  for (const auto& p : pairs) {
    for (const auto& t : p.en) b.add_english(t.surface);
    for (const auto& t : p.fg) b.add_foreign(t.surface, t.lang);
  }
  SenseModel model = init_model(b.build(config.min_count), config);
  live = &model;
  const auto corpus = encode_corpus(pairs, model.vocab, config.variant);
  Trainer(model, corpus, opt).run();
  for (WordId w = 0; w < model.vocab.en_size(); ++w) {
    const auto row = model.sticks.row(w);
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    const double occurrences =
        static_cast<double>(config.iterations * model.vocab.en(w).count);
    EXPECT_NEAR(total, occurrences, 1e-6 * occurrences);
  }
}

TEST(Train, MonoNeverTouchesForeignMatrices) {
  const auto pairs = small_corpus();
  auto config = small_config();
  config.variant = Variant::kMono;
  VocabularyBuilder b;
  for (const auto& p : pairs) {
    for (const auto& t : p.en) b.add_english(t.surface);
    for (const auto& t : p.fg) b.add_foreign(t.surface, t.lang);
  }
  SenseModel model = init_model(b.build(config.min_count), config);
  const auto initial = model;
  const auto corpus = encode_corpus(pairs, model.vocab, config.variant);
  Trainer(model, corpus).run();
  EXPECT_EQ(model.in_fg, initial.in_fg);
  EXPECT_EQ(model.ctx_fg, initial.ctx_fg);
  EXPECT_NE(model.in_en, initial.in_en);
}

TEST(Train, FullTrainingMovesForeignVectors) {
  const auto pairs = small_corpus();
  const auto m = train(pairs, small_config());
  bool moved = false;
  for (Real x : m.ctx_fg.data()) moved = moved || x != 0;
  EXPECT_TRUE(moved);
}

TEST(Train, DeterministicSingleThreaded) {
  const auto pairs = small_corpus();
  EXPECT_EQ(train(pairs, small_config()), train(pairs, small_config()));
}

TEST(Train, ResumeMatchesContinuousRun) {
  const auto pairs = small_corpus();
  auto config = small_config();
  config.iterations = 3;
  const auto full = train(pairs, config);

  TrainOptions first;
  first.stop_after_epochs = 1;
  auto partial = train(pairs, config, first);
  EXPECT_EQ(partial.state.epochs_done, 1u);
  resume(partial, pairs);
  EXPECT_EQ(partial.state.epochs_done, 3u);
  EXPECT_EQ(partial, full);
}

TEST(Train, ScheduledTokensCoverBothSides) {
  const auto pairs = small_corpus();
  const auto config = small_config();
  auto m = train(pairs, config);
  const auto corpus = encode_corpus(pairs, m.vocab, config.variant);
  Trainer t(m, corpus);
  EXPECT_EQ(t.scheduled_tokens(),
            config.iterations * (corpus.en_tokens + corpus.fg_tokens));
  EXPECT_FALSE(t.run_epoch());
}

TEST(Train, ProgressLinesGoToStream) {
  const auto pairs = small_corpus();
  std::ostringstream os;
  TrainOptions opt;
  opt.progress = &os;
  opt.progress_every = 500;
  train(pairs, small_config(), opt);
  EXPECT_NE(os.str().find("lr"), std::string::npos);
}

TEST(Train, ParallelRunProducesFiniteModel) {
  const auto pairs = small_corpus();
  TrainOptions opt;
  opt.threads = 2;
  const auto m = train(pairs, small_config(), opt);
  for (Real x : m.in_en.data()) ASSERT_TRUE(std::isfinite(x));
}

}  // namespace
}  // namespace parasense

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "parasense/corpus.h"
#include "parasense/inference.h"
#include "parasense/model.h"
#include "parasense/noise_table.h"

namespace parasense {

// A sentence pair reduced to in-vocabulary ids. Out-of-vocabulary tokens are
// removed before windows are built, and alignments are remapped to the
// surviving positions.
struct EncodedPair {
  std::vector<WordId> en;
  std::vector<WordId> fg;
  std::vector<std::int32_t> a_ef;
  std::vector<std::int32_t> a_fe;
  std::uint32_t lang = 0;
};

struct EncodedCorpus {
  std::vector<EncodedPair> pairs;
  std::uint64_t en_tokens = 0;
  std::uint64_t fg_tokens = 0;
};

// The foreign side is dropped for the Mono variant.
EncodedPair encode_pair(const AlignedSentencePair& pair, const Vocabulary& vocab,
                        Variant variant);
EncodedCorpus encode_corpus(std::span<const AlignedSentencePair> pairs,
                            const Vocabulary& vocab, Variant variant);

struct TrainHooks {
  // Called with the renormalised posterior of every English occurrence,
  // before the stick statistics and parameters are updated.
  std::function<void(WordId, std::span<const double>)> on_posterior;
  // Called after the parameter update for that occurrence.
  std::function<void(WordId, std::span<const double>)> after_update;
};

struct TrainOptions {
  // Status line every `progress_every` tokens when non-null.
  std::ostream* progress = nullptr;
  std::uint64_t progress_every = 100000;
  // Stop once this many epochs (in total, including resumed ones) are done.
  std::optional<std::uint32_t> stop_after_epochs;
  // > 1 enables lock-free parallel updates; results are then not bitwise
  // reproducible.
  unsigned threads = 1;
  TrainHooks hooks;
};

class Trainer {
 public:
  Trainer(SenseModel& model, const EncodedCorpus& corpus,
          TrainOptions options = {});

  // Runs epochs until config.iterations (or stop_after_epochs) is reached.
  void run();
  // Runs one epoch; returns false if the schedule is already complete.
  bool run_epoch();

  std::uint64_t scheduled_tokens() const noexcept { return total_tokens_; }

 private:
  struct Worker;

  void process_range(std::size_t begin, std::size_t end, Worker& w);
  void process_pair(const EncodedPair& pair, Worker& w);
  void update_english(const EncodedPair& pair, std::size_t i, Worker& w);
  void update_foreign(const EncodedPair& pair, std::size_t j, Worker& w);
  const EncodedPair& maybe_subsample(const EncodedPair& pair, Worker& w);
  const NoiseTable& table_for(Side side, std::uint32_t lang) const;
  void tick(Worker& w);

  SenseModel& model_;
  const EncodedCorpus& corpus_;
  TrainOptions options_;
  NoiseTable en_noise_;
  std::vector<NoiseTable> fg_noise_;
  std::uint64_t total_tokens_ = 0;
  std::vector<double> keep_en_;
  std::vector<double> keep_fg_;
};

// Builds the vocabulary from the corpus, initialises a model and trains it.
SenseModel train(std::span<const AlignedSentencePair> pairs,
                 const TrainConfig& config, TrainOptions options = {});
SenseModel train(const CorpusManifest& manifest, const TrainConfig& config,
                 TrainOptions options = {});

// Continues training a checkpointed model on the same corpus.
void resume(SenseModel& model, std::span<const AlignedSentencePair> pairs,
            TrainOptions options = {});

}  // namespace parasense

#include "parasense/trainer.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <thread>

#include "parasense/error.h"

namespace parasense {

namespace {

// Keeps positions with keep[p] true and remaps alignments onto them.
void compact(std::vector<WordId>& en, std::vector<WordId>& fg,
             std::vector<std::int32_t>& a_ef, std::vector<std::int32_t>& a_fe,
             const std::vector<char>& keep_en, const std::vector<char>& keep_fg) {
  std::vector<std::int32_t> en_map(en.size(), kUnaligned);
  std::vector<std::int32_t> fg_map(fg.size(), kUnaligned);
  std::size_t ne = 0, nf = 0;
  for (std::size_t i = 0; i < en.size(); ++i) {
    if (keep_en[i]) {
      en_map[i] = static_cast<std::int32_t>(ne);
      en[ne++] = en[i];
    }
  }
  for (std::size_t j = 0; j < fg.size(); ++j) {
    if (keep_fg[j]) {
      fg_map[j] = static_cast<std::int32_t>(nf);
      fg[nf++] = fg[j];
    }
  }
  std::vector<std::int32_t> new_ef(ne, kUnaligned);
  std::vector<std::int32_t> new_fe(nf, kUnaligned);
  for (std::size_t i = 0; i < a_ef.size(); ++i) {
    if (en_map[i] == kUnaligned || a_ef[i] == kUnaligned) continue;
    new_ef[en_map[i]] = fg_map[a_ef[i]];
  }
  for (std::size_t j = 0; j < a_fe.size(); ++j) {
    if (fg_map[j] == kUnaligned || a_fe[j] == kUnaligned) continue;
    new_fe[fg_map[j]] = en_map[a_fe[j]];
  }
  en.resize(ne);
  fg.resize(nf);
  a_ef = std::move(new_ef);
  a_fe = std::move(new_fe);
}

std::vector<double> keep_probabilities(std::span<const std::uint64_t> counts,
                                       double threshold) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  std::vector<double> keep(counts.size(), 1.0);
  if (threshold <= 0 || total == 0) return keep;
  const double t = threshold * static_cast<double>(total);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double f = static_cast<double>(counts[i]);
    if (f > 0) keep[i] = std::min(1.0, (std::sqrt(f / t) + 1) * t / f);
  }
  return keep;
}

}  // namespace

EncodedPair encode_pair(const AlignedSentencePair& pair, const Vocabulary& vocab,
                        Variant variant) {
  EncodedPair out;
  std::vector<char> keep_en(pair.en.size(), 0);
  std::vector<char> keep_fg(pair.fg.size(), 0);
  out.en.resize(pair.en.size());
  for (std::size_t i = 0; i < pair.en.size(); ++i) {
    if (auto id = vocab.en_id(pair.en[i].surface)) {
      out.en[i] = *id;
      keep_en[i] = 1;
    }
  }
  if (variant != Variant::kMono) {
    out.fg.resize(pair.fg.size());
    for (std::size_t j = 0; j < pair.fg.size(); ++j) {
      if (auto id = vocab.fg_id(pair.fg[j].surface, pair.fg[j].lang)) {
        out.fg[j] = *id;
        keep_fg[j] = 1;
      }
    }
    out.a_ef = pair.a_ef;
    out.a_fe = pair.a_fe;
    if (auto li = vocab.language_index(pair.lang)) out.lang = *li;
  } else {
    keep_fg.clear();
    out.a_ef.assign(pair.en.size(), kUnaligned);
  }
  compact(out.en, out.fg, out.a_ef, out.a_fe, keep_en, keep_fg);
  return out;
}

EncodedCorpus encode_corpus(std::span<const AlignedSentencePair> pairs,
                            const Vocabulary& vocab, Variant variant) {
  EncodedCorpus corpus;
  corpus.pairs.reserve(pairs.size());
  for (const auto& p : pairs) {
    auto e = encode_pair(p, vocab, variant);
    corpus.en_tokens += e.en.size();
    corpus.fg_tokens += e.fg.size();
    corpus.pairs.push_back(std::move(e));
  }
  return corpus;
}

struct Trainer::Worker {
  Rng rng;
  UpdateScratch scratch;
  std::vector<double> z;
  std::vector<ContextSlot> slots;
  std::vector<ContextWord> context;
  std::vector<WordId> negatives;
  EncodedPair sampled;
  std::vector<char> keep_en;
  std::vector<char> keep_fg;
  std::atomic<std::uint64_t>* tokens = nullptr;
  std::uint64_t local_tokens = 0;
  double lr = 0;
  std::chrono::steady_clock::time_point report_start;
  std::uint64_t report_tokens = 0;
  bool reporter = false;
};

Trainer::Trainer(SenseModel& model, const EncodedCorpus& corpus,
                 TrainOptions options)
    : model_(model), corpus_(corpus), options_(std::move(options)) {
  const auto& cfg = model_.config;
  cfg.validate();
  const auto& vocab = model_.vocab;
  en_noise_ = build_english_noise_table(vocab, cfg.noise_power);
  if (cfg.variant != Variant::kMono) {
    for (std::uint32_t l = 0; l < vocab.languages().size(); ++l) {
      bool any = false;
      for (const auto& e : vocab.fg_entries()) any = any || e.lang == l;
      fg_noise_.push_back(any ? build_foreign_noise_table(vocab, l,
                                                          cfg.noise_power)
                              : NoiseTable());
    }
  }
  const std::uint64_t per_epoch =
      corpus_.en_tokens +
      (cfg.variant == Variant::kMono ? 0 : corpus_.fg_tokens);
  total_tokens_ = static_cast<std::uint64_t>(cfg.iterations) * per_epoch;

  if (cfg.subsample > 0) {
    std::vector<std::uint64_t> c;
    for (const auto& e : vocab.en_entries()) c.push_back(e.count);
    keep_en_ = keep_probabilities(c, cfg.subsample);
    c.clear();
    for (const auto& e : vocab.fg_entries()) c.push_back(e.count);
    keep_fg_ = keep_probabilities(c, cfg.subsample);
  }
}

const NoiseTable& Trainer::table_for(Side side, std::uint32_t lang) const {
  return side == Side::kEnglish ? en_noise_ : fg_noise_[lang];
}

void Trainer::run() {
  while (run_epoch()) {
  }
}

bool Trainer::run_epoch() {
  const auto& cfg = model_.config;
  auto& st = model_.state;
  if (st.epochs_done >= cfg.iterations) return false;
  if (options_.stop_after_epochs && st.epochs_done >= *options_.stop_after_epochs) {
    return false;
  }

  Rng main_rng;
  main_rng.set_state(st.rng_state);
  std::atomic<std::uint64_t> tokens{st.tokens_processed};
  const unsigned threads = std::max(1u, options_.threads);
  const std::size_t n = corpus_.pairs.size();

  if (threads == 1) {
    Worker w;
    w.rng = main_rng;
    w.tokens = &tokens;
    w.reporter = true;
    w.report_start = std::chrono::steady_clock::now();
    process_range(0, n, w);
    main_rng = w.rng;
  } else {
    std::vector<std::unique_ptr<Worker>> workers;
    for (unsigned t = 0; t < threads; ++t) {
      auto w = std::make_unique<Worker>();
      w->rng = Rng(main_rng.next_u64());
      w->tokens = &tokens;
      w->reporter = t == 0;
      w->report_start = std::chrono::steady_clock::now();
      workers.push_back(std::move(w));
    }
    // Hogwild: workers share the model and write without synchronisation.
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = n * t / threads;
      const std::size_t end = n * (t + 1) / threads;
      pool.emplace_back([this, begin, end, w = workers[t].get()] {
        process_range(begin, end, *w);
      });
    }
    for (auto& th : pool) th.join();
  }

  st.tokens_processed = tokens.load();
  st.rng_state = main_rng.state();
  ++st.epochs_done;
  return true;
}

void Trainer::process_range(std::size_t begin, std::size_t end, Worker& w) {
  for (std::size_t p = begin; p < end; ++p) {
    process_pair(maybe_subsample(corpus_.pairs[p], w), w);
  }
}

const EncodedPair& Trainer::maybe_subsample(const EncodedPair& pair,
                                            Worker& w) {
  if (model_.config.subsample <= 0) return pair;
  w.sampled = pair;
  w.keep_en.assign(pair.en.size(), 0);
  w.keep_fg.assign(pair.fg.size(), 0);
  for (std::size_t i = 0; i < pair.en.size(); ++i) {
    w.keep_en[i] = w.rng.uniform() < keep_en_[pair.en[i]];
  }
  for (std::size_t j = 0; j < pair.fg.size(); ++j) {
    w.keep_fg[j] = w.rng.uniform() < keep_fg_[pair.fg[j]];
  }
  compact(w.sampled.en, w.sampled.fg, w.sampled.a_ef, w.sampled.a_fe,
          w.keep_en, w.keep_fg);
  return w.sampled;
}

void Trainer::process_pair(const EncodedPair& pair, Worker& w) {
  // English side first, then foreign side, for each pair.
  for (std::size_t i = 0; i < pair.en.size(); ++i) {
    update_english(pair, i, w);
    tick(w);
  }
  if (model_.config.variant == Variant::kMono) return;
  for (std::size_t j = 0; j < pair.fg.size(); ++j) {
    update_foreign(pair, j, w);
    tick(w);
  }
}

void Trainer::tick(Worker& w) {
  const std::uint64_t t = w.tokens->fetch_add(1, std::memory_order_relaxed) + 1;
  ++w.report_tokens;
  if (!w.reporter || options_.progress == nullptr ||
      options_.progress_every == 0 || t % options_.progress_every != 0) {
    return;
  }
  const auto now = std::chrono::steady_clock::now();
  const double secs =
      std::chrono::duration<double>(now - w.report_start).count();
  const auto poly = polysemy_stats(model_);
  std::ostringstream line;
  line << "tokens=" << t << "/" << total_tokens_ << " tok/s="
       << static_cast<std::uint64_t>(secs > 0 ? w.report_tokens / secs : 0)
       << " lr=" << learning_rate(t, total_tokens_, model_.config.lr0)
       << " senses";
  for (std::size_t k = 1; k < poly.histogram.size(); ++k) {
    if (poly.histogram[k] > 0) line << ' ' << k << ':' << poly.histogram[k];
  }
  *options_.progress << line.str() << '\n';
  w.report_start = now;
  w.report_tokens = 0;
}

void Trainer::update_english(const EncodedPair& pair, std::size_t i,
                             Worker& w) {
  const auto& cfg = model_.config;
  const WordId x = pair.en[i];
  const double lr = learning_rate(w.tokens->load(std::memory_order_relaxed),
                                  total_tokens_, cfg.lr0);

  english_context_slots(pair.en.size(), pair.a_ef, pair.fg.size(), i, cfg,
                        w.slots);
  w.context.clear();
  for (const auto& s : w.slots) {
    w.context.push_back(s.side == Side::kEnglish
                            ? ContextWord{Side::kEnglish, pair.en[s.pos]}
                            : ContextWord{Side::kForeign, pair.fg[s.pos]});
  }

  // E-step: prior under q(beta), plus the score of every context word.
  w.z.resize(cfg.t_max);
  expected_log_prior(model_.sticks.row(x), cfg.alpha, w.z);
  for (const auto& y : w.context) sense_update(w.z, model_, x, y);
  renormalize_inplace(w.z);
  for (double p : w.z) {
    if (!std::isfinite(p)) {
      throw NumericalError("non-finite sense posterior for word \"" +
                           model_.vocab.en(x).word + "\" at token " +
                           std::to_string(w.tokens->load()) + ", epoch " +
                           std::to_string(model_.state.epochs_done + 1));
    }
  }
  if (options_.hooks.on_posterior) options_.hooks.on_posterior(x, w.z);

  if (cfg.stick_decay > 0) {
    model_.sticks.blend(x, w.z, cfg.stick_decay * lr / cfg.lr0,
                        static_cast<double>(model_.vocab.en(x).count));
  } else {
    model_.sticks.accumulate(x, w.z);
  }

  for (const auto& y : w.context) {
    const auto& table =
        table_for(y.side, y.side == Side::kEnglish ? 0 : pair.lang);
    draw_negatives(table, y.id, cfg.negatives, w.rng, w.negatives);
    gradient_step_theta(model_, x, w.z, y, w.negatives, lr, w.scratch);
  }
  if (options_.hooks.after_update) options_.hooks.after_update(x, w.z);
}

void Trainer::update_foreign(const EncodedPair& pair, std::size_t j,
                             Worker& w) {
  const auto& cfg = model_.config;
  const double lr = learning_rate(w.tokens->load(std::memory_order_relaxed),
                                  total_tokens_, cfg.lr0);
  foreign_context_slots(pair.fg.size(), pair.a_fe, pair.en.size(), j, cfg,
                        w.slots);
  for (const auto& s : w.slots) {
    const ContextWord y = s.side == Side::kEnglish
                              ? ContextWord{Side::kEnglish, pair.en[s.pos]}
                              : ContextWord{Side::kForeign, pair.fg[s.pos]};
    const auto& table =
        table_for(y.side, y.side == Side::kEnglish ? 0 : pair.lang);
    draw_negatives(table, y.id, cfg.negatives, w.rng, w.negatives);
    skip_gram_update(model_, pair.fg[j], y, w.negatives, lr, w.scratch);
  }
}

SenseModel train(std::span<const AlignedSentencePair> pairs,
                 const TrainConfig& config, TrainOptions options) {
  config.validate();
  VocabularyBuilder builder;
  for (const auto& p : pairs) {
    for (const auto& t : p.en) builder.add_english(t.surface);
    if (config.variant == Variant::kMono) continue;
    for (const auto& t : p.fg) builder.add_foreign(t.surface, t.lang);
  }
  SenseModel model = init_model(builder.build(config.min_count), config);
  const auto corpus = encode_corpus(pairs, model.vocab, config.variant);
  Trainer(model, corpus, std::move(options)).run();
  return model;
}

SenseModel train(const CorpusManifest& manifest, const TrainConfig& config,
                 TrainOptions options) {
  const auto pairs = load_manifest(manifest);
  return train(pairs, config, std::move(options));
}

void resume(SenseModel& model, std::span<const AlignedSentencePair> pairs,
            TrainOptions options) {
  const auto corpus = encode_corpus(pairs, model.vocab, model.config.variant);
  Trainer(model, corpus, std::move(options)).run();
}

}  // namespace parasense

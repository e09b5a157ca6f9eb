#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "commands.h"
#include "parasense/corpus.h"
#include "parasense/error.h"
#include "parasense/model.h"
#include "parasense/serialize.h"
#include "parasense/trainer.h"

namespace parasense::cli {

namespace {

struct TrainArgs {
  std::vector<std::string> corpora;
  std::string out;
  std::string resume;
  std::string variant = "full";
  std::string bad_lines = "abort";
  std::uint32_t stop_after = 0;
  unsigned threads = 1;
  std::uint64_t progress_every = 100000;
  bool quiet = false;
  TrainConfig config;
};

void print_summary(const SenseModel& model) {
  const auto stats = polysemy_stats(model);
  std::cout << "active senses:";
  for (std::size_t k = 0; k < stats.histogram.size(); ++k) {
    if (stats.histogram[k] > 0) std::cout << ' ' << k << ':' << stats.histogram[k];
  }
  std::cout << "\npolysemous: " << stats.polysemous_fraction << " of "
            << model.vocab.en_size() << " words\n";
}

void run_train(const TrainArgs& a, const std::vector<const CLI::Option*>& hyper) {
  CorpusManifest manifest;
  for (const auto& spec : a.corpora) manifest.push_back(parse_corpus_source(spec));
  const auto policy = a.bad_lines == "skip" ? BadLinePolicy::kSkip
                                            : BadLinePolicy::kAbort;

  TrainOptions options;
  if (!a.quiet) options.progress = &std::cerr;
  options.progress_every = a.progress_every;
  options.threads = a.threads;
  if (a.stop_after > 0) options.stop_after_epochs = a.stop_after;

  std::vector<LoadStats> stats;
  const auto pairs = load_manifest(manifest, policy, &stats);
  for (std::size_t i = 0; i < stats.size(); ++i) {
    std::cerr << "corpus " << manifest[i].lang << ": " << stats[i].pairs
              << " pairs";
    if (stats[i].skipped_lines) std::cerr << ", " << stats[i].skipped_lines << " skipped";
    if (stats[i].alignment_collisions) {
      std::cerr << ", " << stats[i].alignment_collisions << " alignment collisions";
    }
    std::cerr << '\n';
  }

  SenseModel model;
  if (!a.resume.empty()) {
    model = load_model(a.resume);
    for (const auto* opt : hyper) {
      if (opt->count() > 0) {
        std::cerr << "warning: " << opt->get_name()
                  << " ignored; resuming with the checkpoint's settings\n";
      }
    }
    std::cout << "config: " << describe(model.config) << '\n';
    std::cout << "resuming after epoch " << model.state.epochs_done << '\n';
    resume(model, pairs, options);
  } else {
    TrainConfig config = a.config;
    config.variant = parse_variant(a.variant);
    config.validate();
    if (config.variant == Variant::kMono) {
      std::cerr << "warning: mono variant ignores the foreign and alignment files\n";
    }
    std::cout << "config: " << describe(config) << '\n';
    model = train(pairs, config, options);
  }
  save_model(model, a.out);
  print_summary(model);
  std::cout << "epochs: " << model.state.epochs_done << "/"
            << model.config.iterations << "\nmodel: " << a.out << '\n';
}

}  // namespace

void add_train(CLI::App& app) {
  auto args = std::make_shared<TrainArgs>();
  auto* cmd = app.add_subcommand("train", "Train a model on parallel corpora");
  auto& c = args->config;
  cmd->add_option("--corpus", args->corpora,
                  "Corpus as en.txt,fg.txt,align.txt,LANG (repeatable)")
      ->required();
  cmd->add_option("-o,--out", args->out, "Model file to write")->required();
  cmd->add_option("--resume", args->resume,
                  "Continue training from this checkpoint");
  cmd->add_option("--stop-after", args->stop_after,
                  "Stop after this many epochs in total (0 = run all)");
  cmd->add_option("--threads", args->threads, "Worker threads (1 = deterministic)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--bad-lines", args->bad_lines,
                  "Out-of-bounds alignment lines: abort or skip")
      ->check(CLI::IsMember({"abort", "skip"}));
  cmd->add_option("--progress-every", args->progress_every,
                  "Tokens between progress lines");
  cmd->add_flag("-q,--quiet", args->quiet, "No progress output");

  std::vector<const CLI::Option*> hyper{
      cmd->add_option("--alpha", c.alpha, "DP concentration"),
      cmd->add_option("-T,--senses", c.t_max, "Maximum senses per word"),
      cmd->add_option("--dim", c.dim, "Embedding dimension"),
      cmd->add_option("--window", c.d, "English window d"),
      cmd->add_option("--cross-window", c.d_prime, "Crosslingual window d'"),
      cmd->add_option("--epsilon", c.epsilon, "Sense activity threshold"),
      cmd->add_option("--lr", c.lr0, "Initial learning rate"),
      cmd->add_option("--iterations", c.iterations, "Passes over the corpus"),
      cmd->add_option("--negatives", c.negatives, "Negative samples per context"),
      cmd->add_option("--noise-power", c.noise_power, "Unigram noise exponent"),
      cmd->add_option("--min-count", c.min_count, "Minimum word frequency"),
      cmd->add_option("--variant", args->variant, "full, one-sided or mono")
          ->check(CLI::IsMember({"full", "one-sided", "onesided", "mono"})),
      cmd->add_option("--seed", c.seed, "Random seed"),
      cmd->add_option("--subsample", c.subsample,
                      "Frequent-word subsampling threshold (0 = off)"),
      cmd->add_option("--stick-decay", c.stick_decay,
                      "Stick statistics step size (0 = accumulate)"),
  };
  cmd->callback([args, hyper] { run_train(*args, hyper); });
}

}  // namespace parasense::cli

#include <algorithm>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "commands.h"
#include "parasense/synth.h"

namespace parasense::cli {

void add_synth(CLI::App& app) {
  struct Args {
    std::string out;
    std::vector<std::string> langs{"f1", "f2"};
    std::vector<std::string> merge;
    SynthSpec spec = default_synth_spec({});
    std::size_t planted = 2, senses = 2, topic_size = 40;
  };
  auto a = std::make_shared<Args>();
  auto& s = a->spec;
  auto* cmd = app.add_subcommand(
      "synth", "Generate a planted-sense parallel corpus and WSI set");
  cmd->add_option("-o,--out", a->out, "Output path prefix")->required();
  cmd->add_option("--lang", a->langs, "Foreign languages");
  cmd->add_option("--merge", a->merge,
                  "Languages that give all senses one translation");
  cmd->add_option("--pairs", s.pairs, "Sentence pairs per language");
  cmd->add_option("--seed", s.seed, "Random seed");
  cmd->add_option("--planted", a->planted, "Number of ambiguous words");
  cmd->add_option("--senses", a->senses, "Senses per ambiguous word");
  cmd->add_option("--topic-size", a->topic_size, "Context words per sense");
  cmd->add_option("--sentence-length", s.sentence_length, "Tokens per sentence");
  cmd->add_option("--topic-words", s.topic_words_per_sentence,
                  "Topic words in a topical sentence");
  cmd->add_option("--topic-rate", s.topic_rate,
                  "Fraction of sentences with topic words");
  cmd->add_option("--filler", s.filler_vocab, "Filler vocabulary size");
  cmd->add_option("--wsi-instances", s.wsi_instances, "Held-out WSI instances");
  cmd->add_option("--wsi-context", s.wsi_context, "Context words per instance");
  cmd->add_option("--wsi-topic-words", s.wsi_topic_words,
                  "Topic words per instance");
  cmd->callback([a] {
    auto spec = a->spec;
    spec.planted = make_planted_words(a->planted, a->senses, a->topic_size);
    for (const auto& m : a->merge) {
      if (std::find(a->langs.begin(), a->langs.end(), m) == a->langs.end()) {
        a->langs.push_back(m);
      }
    }
    for (const auto& l : a->langs) {
      const bool merged =
          std::find(a->merge.begin(), a->merge.end(), l) != a->merge.end();
      spec.languages.push_back({l, merged});
    }
    const auto data = generate_synthetic(spec);
    for (const auto& src : write_synthetic(data, a->out)) {
      std::cout << "--corpus " << src.en_path << ',' << src.fg_path << ','
                << src.align_path << ',' << src.lang << '\n';
    }
    std::cout << "wsi " << a->out << ".wsi.tsv\n";
  });
}

}  // namespace parasense::cli

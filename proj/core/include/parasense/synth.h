#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parasense/corpus.h"
#include "parasense/eval.h"

namespace parasense {

// An ambiguous English word; topics[s] is the context vocabulary of sense s.
// Topics of different senses must be disjoint.
struct PlantedWord {
  std::string word;
  std::vector<std::vector<std::string>> topics;
};

// merge_senses: every planted word's senses share one foreign surface form
// in this language (one translation for all senses); otherwise each sense
// has its own translation.
struct SynthLanguage {
  std::string lang;
  bool merge_senses = false;
};

struct SynthSpec {
  std::vector<PlantedWord> planted;
  std::vector<SynthLanguage> languages;
  std::size_t filler_vocab = 200;
  std::size_t pairs = 20000;  // per language
  std::size_t sentence_length = 9;
  // English context slots drawn from the sense topic; the rest are filler.
  std::size_t topic_words_per_sentence = 2;
  // Fraction of training sentences that carry topic words at all.
  double topic_rate = 1.0;
  std::size_t wsi_instances = 200;
  std::size_t wsi_context = 4;
  // Context slots of a WSI instance drawn from the sense topic.
  std::size_t wsi_topic_words = 2;
  std::uint64_t seed = 1;
};

// `planted` words named w0, w1, ...; topic words `w<i>_s<s>_t<j>`.
std::vector<PlantedWord> make_planted_words(std::size_t words,
                                            std::size_t senses,
                                            std::size_t topic_size);

// Defaults sized for the end-to-end checks: 2 planted words with 2 senses,
// 40-word topics, 20k pairs of 9 tokens per language, topic words in 60% of
// training sentences.
SynthSpec default_synth_spec(std::vector<SynthLanguage> languages,
                             std::uint64_t seed = 1);

struct SynthCorpus {
  std::string lang;
  std::vector<AlignedSentencePair> pairs;
  // English planted word -> per-sense foreign lexicalisation.
  std::map<std::string, std::vector<std::string>> lexicalization;
};

struct SynthData {
  std::vector<SynthCorpus> corpora;  // one per language, spec order
  std::vector<WsiInstance> wsi;      // held out, gold = sense index
};

// Foreign surface form of English word `word` in language `lang`.
std::string translate(const std::string& lang, const std::string& word);

SynthData generate_synthetic(const SynthSpec& spec);

// Writes `<prefix>.<lang>.en`, `.fg`, `.align` per corpus and
// `<prefix>.wsi.tsv`; returns the manifest for the written corpora.
CorpusManifest write_synthetic(const SynthData& data, const std::string& prefix);

}  // namespace parasense

#include "parasense/synth.h"

#include <fstream>
#include <set>

#include "parasense/error.h"
#include "parasense/random.h"

namespace parasense {

namespace {

std::string filler_word(std::size_t i) { return "x" + std::to_string(i); }

void validate(const SynthSpec& spec) {
  if (spec.planted.empty()) throw UsageError("synth: no planted words");
  if (spec.sentence_length < 2) throw UsageError("synth: sentence too short");
  if (spec.topic_words_per_sentence + 1 > spec.sentence_length) {
    throw UsageError("synth: more topic words than sentence slots");
  }
  if (!(spec.topic_rate >= 0 && spec.topic_rate <= 1)) {
    throw UsageError("synth: topic rate outside [0, 1]");
  }
  if (spec.wsi_topic_words > spec.wsi_context) {
    throw UsageError("synth: more WSI topic words than context slots");
  }
  const bool needs_filler =
      spec.topic_words_per_sentence + 1 < spec.sentence_length ||
      spec.wsi_topic_words < spec.wsi_context;
  if (needs_filler && spec.filler_vocab == 0) {
    throw UsageError("synth: filler vocabulary is empty");
  }
  for (const auto& p : spec.planted) {
    if (p.topics.empty()) throw UsageError("synth: planted word without senses");
    std::set<std::string> seen;
    for (const auto& topic : p.topics) {
      if (topic.empty()) throw UsageError("synth: empty topic vocabulary");
      for (const auto& w : topic) {
        if (!seen.insert(w).second) {
          throw UsageError("synth: topics of \"" + p.word +
                           "\" overlap on \"" + w + "\"");
        }
      }
    }
  }
}

template <typename T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[rng.below(v.size())];
}

// Planted word at a random slot, `topic_slots` topic words and filler in the
// remaining slots, in random order. Returns the sentence and the planted
// word's position.
std::pair<std::vector<std::string>, std::size_t> make_sentence(
    const SynthSpec& spec, const PlantedWord& planted, std::size_t sense,
    std::size_t length, std::size_t topic_slots, Rng& rng) {
  std::vector<std::string> words;
  words.reserve(length);
  words.push_back(planted.word);
  for (std::size_t i = 0; i < topic_slots; ++i) {
    words.push_back(pick(planted.topics[sense], rng));
  }
  while (words.size() < length) {
    words.push_back(filler_word(rng.below(spec.filler_vocab)));
  }
  // Fisher-Yates with our own draws so output is library-independent.
  for (std::size_t i = words.size(); i > 1; --i) {
    std::swap(words[i - 1], words[rng.below(i)]);
  }
  std::size_t pos = 0;
  while (words[pos] != planted.word) ++pos;
  return {std::move(words), pos};
}

}  // namespace

std::vector<PlantedWord> make_planted_words(std::size_t words,
                                            std::size_t senses,
                                            std::size_t topic_size) {
  std::vector<PlantedWord> out;
  for (std::size_t w = 0; w < words; ++w) {
    PlantedWord p;
    p.word = "w" + std::to_string(w);
    for (std::size_t s = 0; s < senses; ++s) {
      std::vector<std::string> topic;
      for (std::size_t t = 0; t < topic_size; ++t) {
        topic.push_back(p.word + "_s" + std::to_string(s) + "_t" +
                        std::to_string(t));
      }
      p.topics.push_back(std::move(topic));
    }
    out.push_back(std::move(p));
  }
  return out;
}

SynthSpec default_synth_spec(std::vector<SynthLanguage> languages,
                             std::uint64_t seed) {
  SynthSpec spec;
  spec.planted = make_planted_words(2, 2, 40);
  spec.topic_rate = 0.6;
  spec.languages = std::move(languages);
  spec.seed = seed;
  return spec;
}

std::string translate(const std::string& lang, const std::string& word) {
  return lang + ":" + word;
}

SynthData generate_synthetic(const SynthSpec& spec) {
  validate(spec);
  SynthData data;
  Rng master(spec.seed);
  for (const auto& language : spec.languages) {
    Rng rng(master.next_u64());
    SynthCorpus corpus;
    corpus.lang = language.lang;
    for (const auto& p : spec.planted) {
      auto& lex = corpus.lexicalization[p.word];
      for (std::size_t s = 0; s < p.topics.size(); ++s) {
        lex.push_back(language.merge_senses
                          ? translate(language.lang, p.word)
                          : translate(language.lang,
                                      p.word + "." + std::to_string(s)));
      }
    }
    corpus.pairs.reserve(spec.pairs);
    const std::string en_tag(kEnglish);
    for (std::size_t n = 0; n < spec.pairs; ++n) {
      const auto& planted = pick(spec.planted, rng);
      const std::size_t sense = rng.below(planted.topics.size());
      const std::size_t topic_slots =
          rng.uniform() < spec.topic_rate ? spec.topic_words_per_sentence : 0;
      auto [words, pos] = make_sentence(spec, planted, sense,
                                        spec.sentence_length, topic_slots, rng);
      std::vector<Token> en, fg;
      std::vector<AlignmentLink> links;
      for (std::size_t i = 0; i < words.size(); ++i) {
        fg.push_back({i == pos ? corpus.lexicalization[planted.word][sense]
                               : translate(language.lang, words[i]),
                      language.lang});
        en.push_back({std::move(words[i]), en_tag});
        links.push_back({i, i});
      }
      corpus.pairs.push_back(make_sentence_pair(std::move(en), std::move(fg),
                                                links, language.lang));
    }
    data.corpora.push_back(std::move(corpus));
  }

  Rng rng(master.next_u64());
  for (std::size_t n = 0; n < spec.wsi_instances; ++n) {
    const auto& planted = pick(spec.planted, rng);
    const std::size_t sense = rng.below(planted.topics.size());
    auto [words, pos] = make_sentence(spec, planted, sense,
                                      spec.wsi_context + 1,
                                      spec.wsi_topic_words, rng);
    WsiInstance inst;
    inst.target = planted.word;
    inst.gold = std::to_string(sense);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i != pos) inst.context.push_back(std::move(words[i]));
    }
    data.wsi.push_back(std::move(inst));
  }
  return data;
}

CorpusManifest write_synthetic(const SynthData& data, const std::string& prefix) {
  CorpusManifest manifest;
  for (const auto& c : data.corpora) {
    CorpusSource src{prefix + "." + c.lang + ".en", prefix + "." + c.lang + ".fg",
                     prefix + "." + c.lang + ".align", c.lang};
    std::ofstream en(src.en_path), fg(src.fg_path), al(src.align_path);
    if (!en || !fg || !al) {
      throw DataError("cannot write synthetic corpus under " + prefix);
    }
    for (const auto& p : c.pairs) {
      for (std::size_t i = 0; i < p.en.size(); ++i) {
        en << (i ? " " : "") << p.en[i].surface;
      }
      en << '\n';
      for (std::size_t j = 0; j < p.fg.size(); ++j) {
        fg << (j ? " " : "") << p.fg[j].surface;
      }
      fg << '\n';
      bool first = true;
      for (std::size_t i = 0; i < p.a_ef.size(); ++i) {
        if (p.a_ef[i] == kUnaligned) continue;
        al << (first ? "" : " ") << i << '-' << p.a_ef[i];
        first = false;
      }
      al << '\n';
    }
    manifest.push_back(src);
  }
  std::ofstream wsi(prefix + ".wsi.tsv");
  if (!wsi) throw DataError("cannot write " + prefix + ".wsi.tsv");
  write_wsi_tsv(data.wsi, wsi);
  return manifest;
}

}  // namespace parasense

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "parasense/corpus.h"

namespace parasense {

using WordId = std::uint32_t;

struct EnglishEntry {
  std::string word;
  std::uint64_t count = 0;

  friend bool operator==(const EnglishEntry&, const EnglishEntry&) = default;
};

// Foreign words are keyed by (surface, language) so equal surfaces in two
// languages never share a vector.
struct ForeignEntry {
  std::string word;
  std::uint32_t lang = 0;  // index into Vocabulary::languages()
  std::uint64_t count = 0;

  friend bool operator==(const ForeignEntry&, const ForeignEntry&) = default;
};

class Vocabulary {
 public:
  Vocabulary() = default;

  // Entries must already satisfy the vocabulary invariants; used by the
  // builder and by the model loader.
  Vocabulary(std::vector<std::string> languages, std::vector<EnglishEntry> en,
             std::vector<ForeignEntry> fg);

  std::size_t en_size() const noexcept { return en_.size(); }
  std::size_t fg_size() const noexcept { return fg_.size(); }
  std::uint64_t n_e() const noexcept { return n_e_; }
  std::uint64_t n_f() const noexcept { return n_f_; }

  const std::vector<std::string>& languages() const noexcept {
    return languages_;
  }
  std::optional<std::uint32_t> language_index(std::string_view lang) const;

  const EnglishEntry& en(WordId id) const { return en_[id]; }
  const ForeignEntry& fg(WordId id) const { return fg_[id]; }
  const std::vector<EnglishEntry>& en_entries() const noexcept { return en_; }
  const std::vector<ForeignEntry>& fg_entries() const noexcept { return fg_; }

  std::optional<WordId> en_id(std::string_view word) const;
  std::optional<WordId> fg_id(std::string_view word,
                              std::string_view lang) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.languages_ == b.languages_ && a.en_ == b.en_ && a.fg_ == b.fg_;
  }

 private:
  void index();

  std::vector<std::string> languages_;
  std::vector<EnglishEntry> en_;
  std::vector<ForeignEntry> fg_;
  std::unordered_map<std::string, WordId> en_index_;
  // Key is lang + '\x1f' + word.
  std::unordered_map<std::string, WordId> fg_index_;
  std::uint64_t n_e_ = 0;
  std::uint64_t n_f_ = 0;
};

// Incremental counter so vocabularies can be built from a stream.
class VocabularyBuilder {
 public:
  void add(const AlignedSentencePair& pair);
  void add_english(std::string_view word, std::uint64_t count = 1);
  void add_foreign(std::string_view word, std::string_view lang,
                   std::uint64_t count = 1);

  // Drops words below min_count and assigns ids by descending count, ties
  // broken by surface. Throws DataError when nothing is left on the English
  // side.
  Vocabulary build(std::uint64_t min_count) const;

 private:
  std::unordered_map<std::string, std::uint64_t> en_counts_;
  std::vector<std::string> languages_;
  std::vector<std::unordered_map<std::string, std::uint64_t>> fg_counts_;
};

Vocabulary build_vocabulary(const std::vector<AlignedSentencePair>& pairs,
                            std::uint64_t min_count);
Vocabulary build_vocabulary(ManifestReader& reader, std::uint64_t min_count);

}  // namespace parasense

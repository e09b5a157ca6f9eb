#include "parasense/vocabulary.h"

#include <algorithm>
#include <utility>

#include "parasense/error.h"

namespace parasense {

namespace {

std::string foreign_key(std::string_view word, std::string_view lang) {
  std::string key;
  key.reserve(lang.size() + 1 + word.size());
  key.append(lang);
  key.push_back('\x1f');
  key.append(word);
  return key;
}

template <typename Map>
std::vector<std::pair<std::string, std::uint64_t>> retained_sorted(
    const Map& counts, std::uint64_t min_count) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& [w, c] : counts) {
    if (c >= min_count) out.emplace_back(w, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> languages,
                       std::vector<EnglishEntry> en,
                       std::vector<ForeignEntry> fg)
    : languages_(std::move(languages)), en_(std::move(en)), fg_(std::move(fg)) {
  index();
}

void Vocabulary::index() {
  en_index_.clear();
  fg_index_.clear();
  n_e_ = n_f_ = 0;
  for (WordId i = 0; i < en_.size(); ++i) {
    if (!en_index_.emplace(en_[i].word, i).second) {
      throw DataError("duplicate English vocabulary entry \"" + en_[i].word +
                      "\"");
    }
    n_e_ += en_[i].count;
  }
  for (WordId i = 0; i < fg_.size(); ++i) {
    if (fg_[i].lang >= languages_.size()) {
      throw DataError("foreign entry with unknown language index");
    }
    const auto key = foreign_key(fg_[i].word, languages_[fg_[i].lang]);
    if (!fg_index_.emplace(key, i).second) {
      throw DataError("duplicate foreign vocabulary entry \"" + fg_[i].word +
                      "\"");
    }
    n_f_ += fg_[i].count;
  }
}

std::optional<std::uint32_t> Vocabulary::language_index(
    std::string_view lang) const {
  for (std::uint32_t i = 0; i < languages_.size(); ++i) {
    if (languages_[i] == lang) return i;
  }
  return std::nullopt;
}

std::optional<WordId> Vocabulary::en_id(std::string_view word) const {
  auto it = en_index_.find(std::string(word));
  if (it == en_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<WordId> Vocabulary::fg_id(std::string_view word,
                                        std::string_view lang) const {
  auto it = fg_index_.find(foreign_key(word, lang));
  if (it == fg_index_.end()) return std::nullopt;
  return it->second;
}

void VocabularyBuilder::add(const AlignedSentencePair& pair) {
  for (const auto& t : pair.en) add_english(t.surface);
  for (const auto& t : pair.fg) add_foreign(t.surface, t.lang);
}

void VocabularyBuilder::add_english(std::string_view word,
                                    std::uint64_t count) {
  en_counts_[std::string(word)] += count;
}

void VocabularyBuilder::add_foreign(std::string_view word,
                                    std::string_view lang,
                                    std::uint64_t count) {
  std::size_t li = 0;
  while (li < languages_.size() && languages_[li] != lang) ++li;
  if (li == languages_.size()) {
    languages_.emplace_back(lang);
    fg_counts_.emplace_back();
  }
  fg_counts_[li][std::string(word)] += count;
}

Vocabulary VocabularyBuilder::build(std::uint64_t min_count) const {
  std::vector<EnglishEntry> en;
  for (auto& [w, c] : retained_sorted(en_counts_, min_count)) {
    en.push_back({w, c});
  }
  if (en.empty()) {
    throw DataError("empty corpus: no English word reaches min_count=" +
                    std::to_string(min_count));
  }
  // Foreign ids: languages in first-seen order, each block sorted by count.
  std::vector<ForeignEntry> fg;
  for (std::uint32_t li = 0; li < languages_.size(); ++li) {
    for (auto& [w, c] : retained_sorted(fg_counts_[li], min_count)) {
      fg.push_back({w, li, c});
    }
  }
  return Vocabulary(languages_, std::move(en), std::move(fg));
}

Vocabulary build_vocabulary(const std::vector<AlignedSentencePair>& pairs,
                            std::uint64_t min_count) {
  VocabularyBuilder builder;
  for (const auto& p : pairs) builder.add(p);
  return builder.build(min_count);
}

Vocabulary build_vocabulary(ManifestReader& reader, std::uint64_t min_count) {
  VocabularyBuilder builder;
  while (auto p = reader.next()) builder.add(*p);
  return builder.build(min_count);
}

}  // namespace parasense

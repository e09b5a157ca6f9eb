#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parasense {

inline constexpr std::string_view kEnglish = "en";

struct Token {
  std::string surface;
  std::string lang;

  friend bool operator==(const Token&, const Token&) = default;
};

struct AlignmentLink {
  std::size_t src = 0;  // English position
  std::size_t tgt = 0;  // foreign position

  friend bool operator==(const AlignmentLink&, const AlignmentLink&) = default;
};

inline constexpr std::int32_t kUnaligned = -1;

// One sentence pair with both alignment directions stored densely:
// a_ef[i] is the foreign position aligned to English position i, or
// kUnaligned. a_fe is the inverse with the first link winning on collisions.
struct AlignedSentencePair {
  std::vector<Token> en;
  std::vector<Token> fg;
  std::vector<std::int32_t> a_ef;
  std::vector<std::int32_t> a_fe;
  std::string lang;

  friend bool operator==(const AlignedSentencePair&,
                         const AlignedSentencePair&) = default;
};

// Parses one `i-j i-j ...` alignment line. `line_no` is only used in errors.
std::vector<AlignmentLink> parse_alignment_line(std::string_view line,
                                                std::size_t line_no = 0);

std::vector<std::string> split_whitespace(std::string_view line);

// One (en, fg, align, lang) record of a corpus manifest.
struct CorpusSource {
  std::string en_path;
  std::string fg_path;
  std::string align_path;
  std::string lang;
};

using CorpusManifest = std::vector<CorpusSource>;

// Parses the CLI form `en.txt,fg.txt,align.txt,LANG`.
CorpusSource parse_corpus_source(std::string_view spec);

enum class BadLinePolicy { kAbort, kSkip };

struct LoadStats {
  std::size_t pairs = 0;
  std::size_t skipped_lines = 0;
  // Links dropped because a source or target index already had a link.
  std::size_t alignment_collisions = 0;
};

// Builds a pair from already-tokenized sides. Throws DataError when a link
// exceeds sentence bounds. Duplicate links are dropped (first wins) and
// counted into `collisions` when given.
AlignedSentencePair make_sentence_pair(std::vector<Token> en,
                                       std::vector<Token> fg,
                                       std::span<const AlignmentLink> links,
                                       const std::string& lang,
                                       std::size_t* collisions = nullptr);

// Streams sentence pairs from one line-aligned triple of files.
class ParallelCorpusReader {
 public:
  ParallelCorpusReader(const CorpusSource& source,
                       BadLinePolicy policy = BadLinePolicy::kAbort);

  // Returns the next pair, or nullopt at end of input. Throws DataError on a
  // line-count mismatch and, under kAbort, on an out-of-bounds alignment.
  std::optional<AlignedSentencePair> next();

  const LoadStats& stats() const noexcept { return stats_; }

 private:
  CorpusSource source_;
  BadLinePolicy policy_;
  std::ifstream en_;
  std::ifstream fg_;
  std::ifstream align_;
  std::size_t line_no_ = 0;
  LoadStats stats_;
};

// Concatenates every corpus of a manifest, in manifest order.
class ManifestReader {
 public:
  explicit ManifestReader(CorpusManifest manifest,
                          BadLinePolicy policy = BadLinePolicy::kAbort);

  std::optional<AlignedSentencePair> next();

  // Per-corpus statistics; entries appear once a corpus has been opened.
  const std::vector<LoadStats>& stats() const noexcept { return stats_; }

 private:
  CorpusManifest manifest_;
  BadLinePolicy policy_;
  std::size_t current_ = 0;
  std::unique_ptr<ParallelCorpusReader> reader_;
  std::vector<LoadStats> stats_;
};

std::vector<AlignedSentencePair> load_manifest(
    const CorpusManifest& manifest, BadLinePolicy policy = BadLinePolicy::kAbort,
    std::vector<LoadStats>* stats = nullptr);

// Position range [begin, end) of the symmetric window of radius `d` around
// `i`, truncated at sentence bounds. The centre lies inside the range and
// must be skipped by the caller.
struct Window {
  std::size_t begin = 0;
  std::size_t end = 0;
};

inline Window window_around(std::size_t length, std::size_t i, std::size_t d) {
  Window w;
  w.begin = i >= d ? i - d : 0;
  w.end = (length - 1 - i) >= d ? i + d + 1 : length;
  return w;
}

// Up to 2d items around position i, excluding i itself.
template <typename T>
std::vector<T> neighborhood(std::span<const T> sentence, std::size_t i,
                            std::size_t d) {
  std::vector<T> out;
  if (d == 0 || sentence.empty()) return out;
  const Window w = window_around(sentence.size(), i, d);
  out.reserve(w.end - w.begin - 1);
  for (std::size_t j = w.begin; j < w.end; ++j) {
    if (j != i) out.push_back(sentence[j]);
  }
  return out;
}

}  // namespace parasense

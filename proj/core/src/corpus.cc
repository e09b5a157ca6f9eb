#include "parasense/corpus.h"

#include <charconv>
#include <utility>

#include "parasense/error.h"

namespace parasense {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

bool parse_index(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<Token> tokenize(std::string_view line, const std::string& lang) {
  std::vector<Token> out;
  for (auto& s : split_whitespace(line)) out.push_back({std::move(s), lang});
  return out;
}

}  // namespace

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<AlignmentLink> parse_alignment_line(std::string_view line,
                                                std::size_t line_no) {
  std::vector<AlignmentLink> links;
  for (const auto& tok : split_whitespace(line)) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) {
      throw ParseError(line_no, tok, "malformed alignment (missing '-')");
    }
    AlignmentLink link;
    if (!parse_index(std::string_view(tok).substr(0, dash), link.src) ||
        !parse_index(std::string_view(tok).substr(dash + 1), link.tgt)) {
      throw ParseError(line_no, tok, "malformed alignment (non-integer index)");
    }
    links.push_back(link);
  }
  return links;
}

CorpusSource parse_corpus_source(std::string_view spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = spec.find(',', start);
    parts.emplace_back(spec.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw UsageError("corpus spec must be en,fg,align,lang: \"" +
                     std::string(spec) + "\"");
  }
  for (const auto& p : parts) {
    if (p.empty()) {
      throw UsageError("empty field in corpus spec \"" + std::string(spec) +
                       "\"");
    }
  }
  if (parts[3] == kEnglish) {
    throw UsageError("foreign language tag may not be \"en\"");
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

AlignedSentencePair make_sentence_pair(std::vector<Token> en,
                                       std::vector<Token> fg,
                                       std::span<const AlignmentLink> links,
                                       const std::string& lang,
                                       std::size_t* collisions) {
  AlignedSentencePair pair;
  pair.lang = lang;
  pair.a_ef.assign(en.size(), kUnaligned);
  pair.a_fe.assign(fg.size(), kUnaligned);
  for (const auto& link : links) {
    if (link.src >= en.size() || link.tgt >= fg.size()) {
      throw DataError("alignment " + std::to_string(link.src) + "-" +
                      std::to_string(link.tgt) + " out of bounds for " +
                      std::to_string(en.size()) + "x" +
                      std::to_string(fg.size()) + " sentence pair");
    }
  }
  for (const auto& link : links) {
    auto& fwd = pair.a_ef[link.src];
    if (fwd != kUnaligned) {
      if (collisions) ++*collisions;
      continue;
    }
    fwd = static_cast<std::int32_t>(link.tgt);
  }
  // a_fe is the inverse of the (already functional) a_ef; first link wins.
  for (std::size_t i = 0; i < pair.a_ef.size(); ++i) {
    const auto j = pair.a_ef[i];
    if (j == kUnaligned) continue;
    if (pair.a_fe[j] != kUnaligned) {
      if (collisions) ++*collisions;
      continue;
    }
    pair.a_fe[j] = static_cast<std::int32_t>(i);
  }
  pair.en = std::move(en);
  pair.fg = std::move(fg);
  return pair;
}

ParallelCorpusReader::ParallelCorpusReader(const CorpusSource& source,
                                           BadLinePolicy policy)
    : source_(source),
      policy_(policy),
      en_(source.en_path),
      fg_(source.fg_path),
      align_(source.align_path) {
  if (!en_) throw DataError("cannot open " + source.en_path);
  if (!fg_) throw DataError("cannot open " + source.fg_path);
  if (!align_) throw DataError("cannot open " + source.align_path);
}

std::optional<AlignedSentencePair> ParallelCorpusReader::next() {
  std::string en_line, fg_line, align_line;
  while (true) {
    const bool has_en = static_cast<bool>(std::getline(en_, en_line));
    const bool has_fg = static_cast<bool>(std::getline(fg_, fg_line));
    const bool has_align = static_cast<bool>(std::getline(align_, align_line));
    if (!has_en && !has_fg && !has_align) return std::nullopt;
    ++line_no_;
    if (!(has_en && has_fg && has_align)) {
      throw DataError("line-count mismatch between " + source_.en_path + ", " +
                      source_.fg_path + " and " + source_.align_path +
                      " at line " + std::to_string(line_no_));
    }
    try {
      const auto links = parse_alignment_line(align_line, line_no_);
      auto pair = make_sentence_pair(tokenize(en_line, std::string(kEnglish)),
                                     tokenize(fg_line, source_.lang), links,
                                     source_.lang,
                                     &stats_.alignment_collisions);
      ++stats_.pairs;
      return pair;
    } catch (const ParseError&) {
      throw;
    } catch (const DataError& e) {
      if (policy_ == BadLinePolicy::kAbort) {
        throw DataError(source_.align_path + ":" + std::to_string(line_no_) +
                        ": " + e.what());
      }
      ++stats_.skipped_lines;
    }
  }
}

ManifestReader::ManifestReader(CorpusManifest manifest, BadLinePolicy policy)
    : manifest_(std::move(manifest)), policy_(policy) {}

std::optional<AlignedSentencePair> ManifestReader::next() {
  while (current_ < manifest_.size()) {
    if (!reader_) {
      reader_ = std::make_unique<ParallelCorpusReader>(manifest_[current_],
                                                       policy_);
      stats_.emplace_back();
    }
    auto pair = reader_->next();
    stats_.back() = reader_->stats();
    if (pair) return pair;
    reader_.reset();
    ++current_;
  }
  return std::nullopt;
}

std::vector<AlignedSentencePair> load_manifest(const CorpusManifest& manifest,
                                               BadLinePolicy policy,
                                               std::vector<LoadStats>* stats) {
  ManifestReader reader(manifest, policy);
  std::vector<AlignedSentencePair> out;
  while (auto pair = reader.next()) out.push_back(std::move(*pair));
  if (stats) *stats = reader.stats();
  return out;
}

}  // namespace parasense

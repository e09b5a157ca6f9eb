#include "parasense/corpus.h"

#include <gtest/gtest.h>

#include <map>

#include "parasense/error.h"
#include "parasense/random.h"
#include "test_support.h"

namespace parasense {
namespace {

using testing::TempDir;

std::vector<Token> tokens(const std::vector<std::string>& words,
                          const std::string& lang) {
  std::vector<Token> out;
  for (const auto& w : words) out.push_back({w, lang});
  return out;
}

TEST(ParseAlignmentLine, ParsesPairsInOrder) {
  const auto links = parse_alignment_line("0-0 1-2 3-1");
  ASSERT_EQ(links.size(), 3u);
  EXPECT_EQ(links[0], (AlignmentLink{0, 0}));
  EXPECT_EQ(links[1], (AlignmentLink{1, 2}));
  EXPECT_EQ(links[2], (AlignmentLink{3, 1}));
}

TEST(ParseAlignmentLine, EmptyLineGivesNoLinks) {
  EXPECT_TRUE(parse_alignment_line("").empty());
  EXPECT_TRUE(parse_alignment_line("   \t").empty());
}

TEST(ParseAlignmentLine, MalformedSeparatorNamesToken) {
  try {
    parse_alignment_line("0-0 1:2", 7);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "1:2");
    EXPECT_EQ(e.line(), 7u);
    EXPECT_NE(std::string(e.what()).find("1:2"), std::string::npos);
  }
}

TEST(ParseAlignmentLine, RejectsNonIntegerAndNegativeIndices) {
  EXPECT_THROW(parse_alignment_line("a-1"), ParseError);
  EXPECT_THROW(parse_alignment_line("1-"), ParseError);
  EXPECT_THROW(parse_alignment_line("-1-2"), ParseError);
  EXPECT_THROW(parse_alignment_line("1-2x"), ParseError);
}

TEST(SplitWhitespace, CollapsesRuns) {
  EXPECT_EQ(split_whitespace("  a \t b\r\n"),
            (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(split_whitespace("").empty());
}

TEST(ParseCorpusSource, AcceptsFourFields) {
  const auto src = parse_corpus_source("a.en,a.fr,a.al,fr");
  EXPECT_EQ(src.en_path, "a.en");
  EXPECT_EQ(src.fg_path, "a.fr");
  EXPECT_EQ(src.align_path, "a.al");
  EXPECT_EQ(src.lang, "fr");
}

TEST(ParseCorpusSource, RejectsBadSpecs) {
  EXPECT_THROW(parse_corpus_source("a.en,a.fr,fr"), UsageError);
  EXPECT_THROW(parse_corpus_source("a.en,,a.al,fr"), UsageError);
  EXPECT_THROW(parse_corpus_source("a.en,a.fr,a.al,fr,x"), UsageError);
  EXPECT_THROW(parse_corpus_source("a.en,a.fr,a.al,en"), UsageError);
}

TEST(MakeSentencePair, IdentityAlignment) {
  const std::vector<AlignmentLink> links{{0, 0}, {1, 1}};
  const auto pair = make_sentence_pair(tokens({"the", "bank"}, "en"),
                                       tokens({"la", "banque"}, "fr"), links,
                                       "fr");
  EXPECT_EQ(pair.a_ef, (std::vector<std::int32_t>{0, 1}));
  EXPECT_EQ(pair.a_fe, (std::vector<std::int32_t>{0, 1}));
  EXPECT_EQ(pair.lang, "fr");
}

TEST(MakeSentencePair, OutOfBoundsLinkThrows) {
  const std::vector<AlignmentLink> links{{5, 0}};
  EXPECT_THROW(make_sentence_pair(tokens({"the", "bank"}, "en"),
                                  tokens({"la", "banque"}, "fr"), links, "fr"),
               DataError);
}

TEST(MakeSentencePair, FirstLinkWinsAndCollisionsAreCounted) {
  // English 0 links twice; foreign 1 is the target of two English words.
  const std::vector<AlignmentLink> links{{0, 0}, {0, 1}, {1, 1}, {2, 1}};
  std::size_t collisions = 0;
  const auto pair = make_sentence_pair(tokens({"a", "b", "c"}, "en"),
                                       tokens({"x", "y"}, "fr"), links, "fr",
                                       &collisions);
  EXPECT_EQ(pair.a_ef, (std::vector<std::int32_t>{0, 1, 1}));
  EXPECT_EQ(pair.a_fe, (std::vector<std::int32_t>{0, 1}));
  EXPECT_EQ(collisions, 2u);
}

TEST(MakeSentencePair, InversionIsIdempotentSubMap) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t ne = 1 + rng.below(8);
    const std::size_t nf = 1 + rng.below(8);
    std::vector<AlignmentLink> links;
    const std::size_t n_links = rng.below(12);
    for (std::size_t l = 0; l < n_links; ++l) {
      links.push_back({rng.below(ne), rng.below(nf)});
    }
    std::vector<std::string> en(ne, "e"), fg(nf, "f");
    const auto pair = make_sentence_pair(tokens(en, "en"), tokens(fg, "fr"),
                                         links, "fr");
    for (std::size_t j = 0; j < nf; ++j) {
      const auto i = pair.a_fe[j];
      if (i == kUnaligned) continue;
      ASSERT_LT(static_cast<std::size_t>(i), ne);
      EXPECT_EQ(pair.a_ef[i], static_cast<std::int32_t>(j));
    }
    // Every English link that survived the inversion maps back to itself.
    std::vector<AlignmentLink> inverse;
    for (std::size_t j = 0; j < nf; ++j) {
      if (pair.a_fe[j] != kUnaligned) {
        inverse.push_back({static_cast<std::size_t>(pair.a_fe[j]), j});
      }
    }
    const auto again = make_sentence_pair(tokens(en, "en"), tokens(fg, "fr"),
                                          inverse, "fr");
    EXPECT_EQ(again.a_fe, pair.a_fe);
  }
}

TEST(ParallelCorpusReader, ReadsPairsInFileOrder) {
  TempDir dir;
  const CorpusSource src{dir.write("c.en", "the bank\nthe river bank\n"),
                         dir.write("c.fr", "la banque\nla rive\n"),
                         dir.write("c.al", "0-0 1-1\n0-0 2-1\n"), "fr"};
  ParallelCorpusReader reader(src);
  auto first = reader.next();
  ASSERT_TRUE(first);
  EXPECT_EQ(first->en[1].surface, "bank");
  EXPECT_EQ(first->en[1].lang, "en");
  EXPECT_EQ(first->fg[1].lang, "fr");
  EXPECT_EQ(first->a_ef, (std::vector<std::int32_t>{0, 1}));
  auto second = reader.next();
  ASSERT_TRUE(second);
  EXPECT_EQ(second->a_ef, (std::vector<std::int32_t>{0, kUnaligned, 1}));
  EXPECT_FALSE(reader.next());
  EXPECT_EQ(reader.stats().pairs, 2u);
}

TEST(ParallelCorpusReader, LineCountMismatchIsAnError) {
  TempDir dir;
  const CorpusSource src{dir.write("c.en", "a b\nc d\n"),
                         dir.write("c.fr", "x y\n"),
                         dir.write("c.al", "0-0\n0-0\n"), "fr"};
  ParallelCorpusReader reader(src);
  ASSERT_TRUE(reader.next());
  EXPECT_THROW(reader.next(), DataError);
}

TEST(ParallelCorpusReader, OutOfBoundsAbortNamesLine) {
  TempDir dir;
  const CorpusSource src{dir.write("c.en", "a b\nc d\n"),
                         dir.write("c.fr", "x y\nz w\n"),
                         dir.write("c.al", "0-0\n5-0\n"), "fr"};
  ParallelCorpusReader reader(src);
  ASSERT_TRUE(reader.next());
  try {
    reader.next();
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos);
  }
}

TEST(ParallelCorpusReader, OutOfBoundsSkipCountsLine) {
  TempDir dir;
  const CorpusSource src{dir.write("c.en", "a b\nc d\ne f\n"),
                         dir.write("c.fr", "x y\nz w\nu v\n"),
                         dir.write("c.al", "0-0\n5-0\n1-1\n"), "fr"};
  ParallelCorpusReader reader(src, BadLinePolicy::kSkip);
  std::vector<AlignedSentencePair> pairs;
  while (auto p = reader.next()) pairs.push_back(std::move(*p));
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[1].en[0].surface, "e");
  EXPECT_EQ(reader.stats().skipped_lines, 1u);
}

TEST(ParallelCorpusReader, MissingFileIsDataError) {
  EXPECT_THROW(ParallelCorpusReader({"/nonexistent/a", "/nonexistent/b",
                                     "/nonexistent/c", "fr"}),
               DataError);
}

TEST(ManifestReader, ConcatenatesCorporaWithLanguageTags) {
  TempDir dir;
  const CorpusSource fr{dir.write("fr.en", "a b\nc d\n"),
                        dir.write("fr.fg", "x y\nz w\n"),
                        dir.write("fr.al", "0-0\n1-1\n"), "fr"};
  const CorpusSource zh{dir.write("zh.en", "e f\ng\nh i\n"),
                        dir.write("zh.fg", "p\nq\nr\n"),
                        dir.write("zh.al", "0-0\n\n1-0\n"), "zh"};
  std::vector<LoadStats> stats;
  const auto pairs = load_manifest({fr, zh}, BadLinePolicy::kAbort, &stats);
  ASSERT_EQ(pairs.size(), 5u);
  EXPECT_EQ(pairs[0].lang, "fr");
  EXPECT_EQ(pairs[1].lang, "fr");
  EXPECT_EQ(pairs[2].lang, "zh");
  EXPECT_EQ(pairs[4].fg[0].lang, "zh");
  ASSERT_EQ(stats.size(), 2u);
  EXPECT_EQ(stats[0].pairs + stats[1].pairs, pairs.size());
  EXPECT_EQ(stats[0].pairs, 2u);
  EXPECT_EQ(stats[1].pairs, 3u);
}

TEST(Neighborhood, InteriorWindow) {
  const std::vector<std::string> s{"a", "b", "c", "d", "e"};
  EXPECT_EQ(neighborhood<std::string>(s, 2, 1),
            (std::vector<std::string>{"b", "d"}));
}

TEST(Neighborhood, TruncatedAtBoundary) {
  const std::vector<std::string> s{"a", "b", "c"};
  EXPECT_EQ(neighborhood<std::string>(s, 0, 4),
            (std::vector<std::string>{"b", "c"}));
}

TEST(Neighborhood, ZeroWindowIsEmpty) {
  const std::vector<std::string> s{"a", "b", "c"};
  EXPECT_TRUE(neighborhood<std::string>(s, 1, 0).empty());
}

TEST(Neighborhood, NeverReturnsCentreOrMoreThanTwoD) {
  for (std::size_t len = 1; len < 12; ++len) {
    std::vector<int> s(len);
    for (std::size_t i = 0; i < len; ++i) s[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t d = 0; d < 7; ++d) {
        const auto n = neighborhood<int>(s, i, d);
        EXPECT_LE(n.size(), 2 * d);
        EXPECT_EQ(n.size(), std::min(d, i) + std::min(d, len - 1 - i));
        for (int v : n) EXPECT_NE(v, static_cast<int>(i));
      }
    }
  }
}

}  // namespace
}  // namespace parasense

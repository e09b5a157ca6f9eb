#include "parasense/noise_table.h"

#include <gtest/gtest.h>

#include <cmath>

#include "parasense/error.h"

namespace parasense {
namespace {

TEST(NoiseTable, PowerThreeQuarters) {
  const std::vector<std::uint64_t> counts{8, 1};
  const NoiseTable t({0, 1}, counts, 0.75);
  const long double a = std::pow(8.0L, 0.75L);
  const double expected = static_cast<double>(a / (a + 1.0L));
  EXPECT_NEAR(t.probability(0), expected, 1e-12);
  EXPECT_NEAR(t.probability(0), 0.8263, 5e-5);
  EXPECT_NEAR(t.probability(0) + t.probability(1), 1.0, 1e-12);
}

TEST(NoiseTable, PowerZeroIsUniform) {
  const std::vector<std::uint64_t> counts{100, 3, 1, 7};
  const NoiseTable t({0, 1, 2, 3}, counts, 0.0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(t.probability(i), 0.25, 1e-12);
}

TEST(NoiseTable, SingleWordHasProbabilityOne) {
  const std::vector<std::uint64_t> counts{42};
  const NoiseTable t({7}, counts, 0.75);
  EXPECT_EQ(t.probability(0), 1.0);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(t.sample(rng), 7u);
}

TEST(NoiseTable, EmptySideIsAnError) {
  EXPECT_THROW(NoiseTable({}, std::vector<std::uint64_t>{}, 0.75), DataError);
  const Vocabulary v({"fr"}, {{"a", 3}}, {});
  EXPECT_THROW(build_foreign_noise_table(v, 0, 0.75), DataError);
}

TEST(NoiseTable, RejectsNegativePower) {
  const std::vector<std::uint64_t> counts{1, 2};
  EXPECT_THROW(NoiseTable({0, 1}, counts, -1.0), UsageError);
}

TEST(NoiseTable, ProbabilitiesSumToOne) {
  std::vector<std::uint64_t> counts;
  std::vector<WordId> ids;
  for (WordId i = 0; i < 1000; ++i) {
    ids.push_back(i);
    counts.push_back(1 + (i * 7919) % 1013);
  }
  const NoiseTable t(ids, counts, 0.75);
  double total = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) total += t.probability(i);
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(NoiseTable, SampleFrequenciesWithinThreeStandardErrors) {
  const std::vector<std::uint64_t> counts{50, 20, 10, 5, 1};
  const std::vector<WordId> ids{10, 11, 12, 13, 14};
  const NoiseTable t(ids, counts, 0.75);
  Rng rng(2024);
  const int draws = 1'000'000;
  std::vector<int> hits(ids.size(), 0);
  for (int i = 0; i < draws; ++i) {
    const WordId w = t.sample(rng);
    ASSERT_GE(w, 10u);
    ASSERT_LE(w, 14u);
    ++hits[w - 10];
  }
  long double z = 0;
  for (auto c : counts) z += std::pow(static_cast<long double>(c), 0.75L);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const double p = static_cast<double>(
        std::pow(static_cast<long double>(counts[i]), 0.75L) / z);
    const double se = std::sqrt(p * (1 - p) / draws);
    EXPECT_NEAR(static_cast<double>(hits[i]) / draws, p, 3 * se) << "slot " << i;
  }
}

TEST(NoiseTable, PerLanguageTablesOnlyReturnThatLanguage) {
  const Vocabulary v({"fr", "zh"}, {{"a", 3}},
                     {{"x", 0, 5}, {"y", 1, 5}, {"z", 0, 2}});
  const auto fr = build_foreign_noise_table(v, 0, 0.75);
  const auto zh = build_foreign_noise_table(v, 1, 0.75);
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(v.fg(fr.sample(rng)).lang, 0u);
    EXPECT_EQ(v.fg(zh.sample(rng)).lang, 1u);
  }
}

}  // namespace
}  // namespace parasense

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parasense/random.h"
#include "parasense/vocabulary.h"

namespace parasense {

// Negative-sampling distribution P(w) proportional to count(w)^power over a
// subset of ids (one language of the vocabulary).
class NoiseTable {
 public:
  NoiseTable() = default;
  NoiseTable(std::vector<WordId> ids, std::span<const std::uint64_t> counts,
             double power);

  WordId sample(Rng& rng) const;

  double probability(std::size_t slot) const;
  std::span<const WordId> ids() const noexcept { return ids_; }
  std::span<const double> cumulative() const noexcept { return cumulative_; }
  bool empty() const noexcept { return ids_.empty(); }

 private:
  std::vector<WordId> ids_;
  std::vector<double> cumulative_;
};

NoiseTable build_english_noise_table(const Vocabulary& vocab, double power);
NoiseTable build_foreign_noise_table(const Vocabulary& vocab,
                                     std::uint32_t lang, double power);

}  // namespace parasense

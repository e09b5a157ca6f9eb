#include "parasense/noise_table.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "parasense/error.h"

namespace parasense {

NoiseTable::NoiseTable(std::vector<WordId> ids,
                       std::span<const std::uint64_t> counts, double power)
    : ids_(std::move(ids)) {
  if (ids_.empty()) throw DataError("noise table over an empty vocabulary");
  if (counts.size() != ids_.size()) {
    throw UsageError("noise table: ids/counts size mismatch");
  }
  if (!(power >= 0)) throw UsageError("noise table: power must be >= 0");
  // Accumulated in long double; the last entry is pinned to exactly 1.
  std::vector<long double> weights(counts.size());
  long double total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    weights[i] = std::pow(static_cast<long double>(counts[i]),
                          static_cast<long double>(power));
    total += weights[i];
  }
  if (!(total > 0)) throw DataError("noise table: all counts are zero");
  cumulative_.resize(counts.size());
  long double acc = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    acc += weights[i];
    cumulative_[i] = static_cast<double>(acc / total);
  }
  cumulative_.back() = 1.0;
}

WordId NoiseTable::sample(Rng& rng) const {
  const double u = rng.uniform();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return ids_[static_cast<std::size_t>(it - cumulative_.begin())];
}

double NoiseTable::probability(std::size_t slot) const {
  return slot == 0 ? cumulative_[0] : cumulative_[slot] - cumulative_[slot - 1];
}

NoiseTable build_english_noise_table(const Vocabulary& vocab, double power) {
  std::vector<WordId> ids;
  std::vector<std::uint64_t> counts;
  for (WordId i = 0; i < vocab.en_size(); ++i) {
    ids.push_back(i);
    counts.push_back(vocab.en(i).count);
  }
  return NoiseTable(std::move(ids), counts, power);
}

NoiseTable build_foreign_noise_table(const Vocabulary& vocab,
                                     std::uint32_t lang, double power) {
  std::vector<WordId> ids;
  std::vector<std::uint64_t> counts;
  for (WordId i = 0; i < vocab.fg_size(); ++i) {
    if (vocab.fg(i).lang != lang) continue;
    ids.push_back(i);
    counts.push_back(vocab.fg(i).count);
  }
  if (ids.empty()) {
    throw DataError("no foreign words retained for language index " +
                    std::to_string(lang));
  }
  return NoiseTable(std::move(ids), counts, power);
}

}  // namespace parasense

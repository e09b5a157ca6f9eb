#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parasense/model.h"

namespace parasense {

// Posterior over the senses of `word` given monolingual English context:
// softmax over active senses of log prior_k + sum_y log sigma(ctx(y) . x_k).
// Inactive senses get exactly 0. Out-of-vocabulary context words are
// ignored; an unknown target throws DataError.
SenseDistribution disambiguate(const SenseModel& model, std::string_view word,
                               const std::vector<std::string>& context);
SenseDistribution disambiguate(const SenseModel& model, WordId w,
                               const std::vector<WordId>& context);

struct Neighbor {
  std::string label;  // "word#k" (1-based sense) or "word@lang"
  double cosine = 0;
};

// Top-n active English sense vectors (and foreign vectors when requested) by
// cosine to sense k of `word`, excluding that sense itself.
std::vector<Neighbor> nearest_neighbors(const SenseModel& model,
                                        std::string_view word, std::size_t k,
                                        std::size_t n,
                                        bool include_foreign = false);

enum class SimilarityMode { kWeighted, kMaxSense };

// kWeighted: sum_{k,l} P(k|w1,ctx1) P(l|w2,ctx2) cos(x_{w1,k}, x_{w2,l}).
// kMaxSense: cosine between the two most probable senses.
double contextual_similarity(const SenseModel& model, std::string_view w1,
                             const std::vector<std::string>& ctx1,
                             std::string_view w2,
                             const std::vector<std::string>& ctx2,
                             SimilarityMode mode = SimilarityMode::kWeighted);

// Posterior-weighted cosine for already-computed posteriors.
double weighted_sense_similarity(const SenseModel& model, WordId w1,
                                 const SenseDistribution& p1, WordId w2,
                                 const SenseDistribution& p2);

}  // namespace parasense

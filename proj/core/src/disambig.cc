#include "parasense/disambig.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parasense/error.h"
#include "parasense/inference.h"

namespace parasense {

namespace {

WordId require_word(const SenseModel& model, std::string_view word) {
  auto id = model.vocab.en_id(word);
  if (!id) {
    throw DataError("word \"" + std::string(word) + "\" not in vocabulary");
  }
  return *id;
}

}  // namespace

SenseDistribution disambiguate(const SenseModel& model, WordId w,
                               const std::vector<WordId>& context) {
  const auto prior = expected_sense_prior(model, w);
  const std::size_t t = model.config.t_max;
  const double eps = model.config.epsilon;
  std::vector<double> scores(t, -std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < t; ++k) {
    if (!(prior.probs[k] > eps)) continue;
    double s = std::log(prior.probs[k]);
    for (WordId y : context) {
      s += log_sigmoid(dot(model.ctx_en.row(y), model.sense(w, k)));
    }
    scores[k] = s;
  }
  // With epsilon < 1 at least one sense is active, so the max is finite.
  renormalize_inplace(scores);
  return {std::move(scores)};
}

SenseDistribution disambiguate(const SenseModel& model, std::string_view word,
                               const std::vector<std::string>& context) {
  const WordId w = require_word(model, word);
  std::vector<WordId> ids;
  for (const auto& c : context) {
    if (auto id = model.vocab.en_id(c)) ids.push_back(*id);
  }
  return disambiguate(model, w, ids);
}

std::vector<Neighbor> nearest_neighbors(const SenseModel& model,
                                        std::string_view word, std::size_t k,
                                        std::size_t n, bool include_foreign) {
  const WordId w = require_word(model, word);
  const auto active = active_senses(model, w);
  if (std::find(active.begin(), active.end(), k) == active.end()) {
    throw DataError("sense " + std::to_string(k + 1) + " of \"" +
                    std::string(word) + "\" is not active");
  }
  const auto query = model.sense(w, k);
  std::vector<Neighbor> all;
  for (WordId v = 0; v < model.vocab.en_size(); ++v) {
    for (auto s : active_senses(model, v)) {
      if (v == w && s == k) continue;
      all.push_back({model.vocab.en(v).word + "#" + std::to_string(s + 1),
                     cosine(query, model.sense(v, s))});
    }
  }
  if (include_foreign) {
    const auto& langs = model.vocab.languages();
    for (WordId f = 0; f < model.vocab.fg_size(); ++f) {
      const auto& e = model.vocab.fg(f);
      all.push_back({e.word + "@" + langs[e.lang],
                     cosine(query, model.in_fg.row(f))});
    }
  }
  const std::size_t keep = std::min(n, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep),
                    all.end(), [](const Neighbor& a, const Neighbor& b) {
                      if (a.cosine != b.cosine) return a.cosine > b.cosine;
                      return a.label < b.label;
                    });
  all.resize(keep);
  return all;
}

double weighted_sense_similarity(const SenseModel& model, WordId w1,
                                 const SenseDistribution& p1, WordId w2,
                                 const SenseDistribution& p2) {
  double total = 0;
  for (std::size_t k = 0; k < p1.probs.size(); ++k) {
    if (p1.probs[k] == 0) continue;
    for (std::size_t l = 0; l < p2.probs.size(); ++l) {
      if (p2.probs[l] == 0) continue;
      total += p1.probs[k] * p2.probs[l] *
               cosine(model.sense(w1, k), model.sense(w2, l));
    }
  }
  return total;
}

double contextual_similarity(const SenseModel& model, std::string_view w1,
                             const std::vector<std::string>& ctx1,
                             std::string_view w2,
                             const std::vector<std::string>& ctx2,
                             SimilarityMode mode) {
  const WordId id1 = require_word(model, w1);
  const WordId id2 = require_word(model, w2);
  const auto p1 = disambiguate(model, w1, ctx1);
  const auto p2 = disambiguate(model, w2, ctx2);
  if (mode == SimilarityMode::kMaxSense) {
    return cosine(model.sense(id1, p1.argmax()), model.sense(id2, p2.argmax()));
  }
  return weighted_sense_similarity(model, id1, p1, id2, p2);
}

}  // namespace parasense

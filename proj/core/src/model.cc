#include "parasense/model.h"

#include <algorithm>
#include <utility>

#include "parasense/random.h"

namespace parasense {

std::size_t SenseDistribution::argmax() const {
  return static_cast<std::size_t>(
      std::max_element(probs.begin(), probs.end()) - probs.begin());
}

SenseModel init_model(Vocabulary vocab, const TrainConfig& config) {
  config.validate();
  SenseModel m;
  m.config = config;
  m.vocab = std::move(vocab);
  const std::size_t dim = config.dim;
  const std::size_t ve = m.vocab.en_size();
  const std::size_t vf = m.vocab.fg_size();
  m.in_en = Matrix(ve * config.t_max, dim);
  m.ctx_en = Matrix(ve, dim);
  m.in_fg = Matrix(vf, dim);
  m.ctx_fg = Matrix(vf, dim);
  m.sticks = StickStats(ve, config.t_max);

  Rng rng(config.seed);
  const double half = 0.5 / static_cast<double>(dim);
  for (auto& x : m.in_en.data_mutable()) x = rng.uniform(-half, half);
  for (auto& x : m.in_fg.data_mutable()) x = rng.uniform(-half, half);
  m.state.rng_state = rng.state();
  return m;
}

double expected_log_prior(const SenseModel& model, WordId w, std::size_t k) {
  return expected_log_prior(model.sticks.row(w), model.config.alpha).at(k);
}

SenseDistribution expected_sense_prior(const SenseModel& model, WordId w) {
  return {expected_sense_prior(model.sticks.row(w), model.config.alpha)};
}

std::vector<std::size_t> active_senses(const SenseModel& model, WordId w) {
  const auto prior = expected_sense_prior(model, w);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < prior.probs.size(); ++k) {
    if (prior.probs[k] > model.config.epsilon) out.push_back(k);
  }
  return out;
}

PolysemyStats polysemy_stats(const SenseModel& model) {
  PolysemyStats s;
  s.histogram.assign(model.config.t_max + 1, 0);
  std::size_t poly = 0;
  const std::size_t ve = model.vocab.en_size();
  for (WordId w = 0; w < ve; ++w) {
    const auto n = active_senses(model, w).size();
    ++s.histogram[n];
    if (n >= 2) ++poly;
  }
  s.polysemous_fraction =
      ve == 0 ? 0.0 : static_cast<double>(poly) / static_cast<double>(ve);
  return s;
}

}  // namespace parasense

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "parasense/config.h"
#include "parasense/sticks.h"
#include "parasense/vec_math.h"
#include "parasense/vocabulary.h"

namespace parasense {

// Row-major matrix of `rows` vectors of length `cols`.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<Real> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Real> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const Real> data() const noexcept { return data_; }
  std::vector<Real>& data_mutable() noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Real> data_;
};

// Posterior (or prior) over the T senses of one word occurrence.
struct SenseDistribution {
  std::vector<double> probs;

  std::size_t argmax() const;
};

// Where a resumable training run stands.
struct TrainState {
  std::uint32_t epochs_done = 0;
  std::uint64_t tokens_processed = 0;
  std::string rng_state;

  friend bool operator==(const TrainState&, const TrainState&) = default;
};

struct SenseModel {
  TrainConfig config;
  Vocabulary vocab;
  Matrix in_en;   // V_en * T rows; row w * T + k is sense k of word w
  Matrix ctx_en;  // V_en rows
  Matrix in_fg;   // V_fg rows
  Matrix ctx_fg;  // V_fg rows
  StickStats sticks;
  TrainState state;

  std::span<Real> sense(WordId w, std::size_t k) {
    return in_en.row(static_cast<std::size_t>(w) * config.t_max + k);
  }
  std::span<const Real> sense(WordId w, std::size_t k) const {
    return in_en.row(static_cast<std::size_t>(w) * config.t_max + k);
  }

  friend bool operator==(const SenseModel&, const SenseModel&) = default;
};

// Input vectors uniform in [-0.5/dim, 0.5/dim), context vectors zero, stick
// counts zero. Deterministic in config.seed.
SenseModel init_model(Vocabulary vocab, const TrainConfig& config);

// Sense k is 0-based here and everywhere in the API.
double expected_log_prior(const SenseModel& model, WordId w, std::size_t k);
SenseDistribution expected_sense_prior(const SenseModel& model, WordId w);

// Senses whose expected prior probability exceeds config.epsilon.
std::vector<std::size_t> active_senses(const SenseModel& model, WordId w);

struct PolysemyStats {
  // histogram[n] = number of words with n active senses.
  std::vector<std::size_t> histogram;
  double polysemous_fraction = 0;
};

PolysemyStats polysemy_stats(const SenseModel& model);

}  // namespace parasense

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parasense/config.h"
#include "parasense/corpus.h"
#include "parasense/model.h"
#include "parasense/noise_table.h"
#include "parasense/random.h"

namespace parasense {

// Dot products are clamped to this magnitude before the sigmoid.
inline constexpr double kMaxDot = 30.0;

double sigmoid(double t);
// log sigma(t) with t clamped to [-kMaxDot, kMaxDot].
double log_sigmoid(double t);

enum class Side : std::uint8_t { kEnglish, kForeign };

// A context word, resolved to its id in its own side of the vocabulary.
struct ContextWord {
  Side side = Side::kEnglish;
  WordId id = 0;

  friend bool operator==(const ContextWord&, const ContextWord&) = default;
};

inline std::span<const Real> context_vector(const SenseModel& m,
                                            ContextWord y) {
  return y.side == Side::kEnglish ? m.ctx_en.row(y.id) : m.ctx_fg.row(y.id);
}
inline std::span<Real> context_vector(SenseModel& m, ContextWord y) {
  return y.side == Side::kEnglish ? m.ctx_en.row(y.id) : m.ctx_fg.row(y.id);
}

// log sigma(ctx(y) . x)
double log_sigmoid_score(const SenseModel& model, std::span<const Real> x,
                         ContextWord y);

// E-step accumulation: log_scores[k] += log sigma(ctx(y) . x_k) for every
// sense k of English word x_en.
void sense_update(std::span<double> log_scores, const SenseModel& model,
                  WordId x_en, ContextWord y);

// Max-subtracted softmax, in place.
void renormalize_inplace(std::span<double> log_scores);
SenseDistribution renormalize(std::span<const double> log_scores);

// --- Context construction -------------------------------------------------

struct ContextSlot {
  Side side = Side::kEnglish;
  std::size_t pos = 0;

  friend bool operator==(const ContextSlot&, const ContextSlot&) = default;
};

// Context positions for English position i. With crosslingual context (not
// Mono, i aligned) this is the English window of radius d, the foreign window
// of radius d' around the aligned position and the aligned word itself.
// Without it the English window widens to d + 1 so the context budget stays
// the same.
void english_context_slots(std::size_t en_len, std::span<const std::int32_t> a_ef,
                           std::size_t fg_len, std::size_t i,
                           const TrainConfig& config,
                           std::vector<ContextSlot>& out);

// Context positions for foreign position j: the foreign window of radius d,
// plus (Full variant, j aligned) the English window of radius d' around the
// aligned English position and that English word. Empty for Mono.
void foreign_context_slots(std::size_t fg_len, std::span<const std::int32_t> a_fe,
                           std::size_t en_len, std::size_t j,
                           const TrainConfig& config,
                           std::vector<ContextSlot>& out);

std::vector<Token> build_english_context(const AlignedSentencePair& pair,
                                         std::size_t i,
                                         const TrainConfig& config);
std::vector<Token> build_foreign_context(const AlignedSentencePair& pair,
                                         std::size_t j,
                                         const TrainConfig& config);

// --- Negative sampling ----------------------------------------------------

// Draws up to `count` noise ids different from `positive`. A draw equal to
// the positive is retried up to 100 times, then that negative is skipped.
void draw_negatives(const NoiseTable& table, WordId positive, std::size_t count,
                    Rng& rng, std::vector<WordId>& out);

// weight * [log sigma(c_0 . x) + sum_{j>=1} log sigma(-c_j . x)], where
// contexts[0] is the positive context and the rest are negatives.
double negative_sampling_objective(std::span<const Real> x,
                                   std::span<const std::span<const Real>> contexts,
                                   double weight);

// Adds the gradient of negative_sampling_objective w.r.t. x into grad_x and
// w.r.t. contexts[j] into grad_contexts[j].
void negative_sampling_gradient(std::span<const Real> x,
                                std::span<const std::span<const Real>> contexts,
                                double weight, std::span<Real> grad_x,
                                std::span<const std::span<Real>> grad_contexts);

// Reusable buffers for the update kernels.
struct UpdateScratch {
  std::vector<Real> grad_x;
  std::vector<Real> grad_ctx;  // (1 + negatives) * dim
  std::vector<std::span<const Real>> ctx_rows;
  std::vector<std::span<Real>> grad_rows;
};

// One gradient ascent step of
//   sum_{k : senses[k] > eps} senses[k] * [log sigma(ctx(y).x_k)
//                                          + sum_n log sigma(-ctx(n).x_k)]
// over the sense vectors of x_en and the context vectors of y and the
// negatives (same side as y). Senses at or below epsilon are untouched.
void gradient_step_theta(SenseModel& model, WordId x_en,
                         std::span<const double> senses, ContextWord y,
                         std::span<const WordId> negatives, double lr,
                         UpdateScratch& scratch);

// Single-vector negative-sampling step for foreign input vector x_fg against
// context y and negatives drawn from y's side.
void skip_gram_update(SenseModel& model, WordId x_fg, ContextWord y,
                      std::span<const WordId> negatives, double lr,
                      UpdateScratch& scratch);

// lr0 * (1 - t / total), floored at lr0 * 1e-4.
double learning_rate(std::uint64_t t, std::uint64_t total, double lr0);

}  // namespace parasense

#include "parasense/inference.h"

#include <algorithm>
#include <cmath>

namespace parasense {

double sigmoid(double t) {
  t = std::clamp(t, -kMaxDot, kMaxDot);
  return 1.0 / (1.0 + std::exp(-t));
}

double log_sigmoid(double t) {
  t = std::clamp(t, -kMaxDot, kMaxDot);
  return -std::log1p(std::exp(-t));
}

double log_sigmoid_score(const SenseModel& model, std::span<const Real> x,
                         ContextWord y) {
  return log_sigmoid(dot(context_vector(model, y), x));
}

void sense_update(std::span<double> log_scores, const SenseModel& model,
                  WordId x_en, ContextWord y) {
  const auto c = context_vector(model, y);
  for (std::size_t k = 0; k < log_scores.size(); ++k) {
    log_scores[k] += log_sigmoid(dot(c, model.sense(x_en, k)));
  }
}

void renormalize_inplace(std::span<double> s) {
  if (s.empty()) return;
  const double mx = *std::max_element(s.begin(), s.end());
  double total = 0;
  for (auto& v : s) {
    v = std::exp(v - mx);
    total += v;
  }
  for (auto& v : s) v /= total;
}

SenseDistribution renormalize(std::span<const double> log_scores) {
  SenseDistribution d{{log_scores.begin(), log_scores.end()}};
  renormalize_inplace(d.probs);
  return d;
}

namespace {

void push_window(Side side, std::size_t len, std::size_t center, std::size_t d,
                 std::vector<ContextSlot>& out) {
  if (d == 0 || len == 0) return;
  const Window w = window_around(len, center, d);
  for (std::size_t p = w.begin; p < w.end; ++p) {
    if (p != center) out.push_back({side, p});
  }
}

std::vector<Token> slots_to_tokens(const AlignedSentencePair& pair,
                                   const std::vector<ContextSlot>& slots) {
  std::vector<Token> out;
  out.reserve(slots.size());
  for (const auto& s : slots) {
    out.push_back(s.side == Side::kEnglish ? pair.en[s.pos] : pair.fg[s.pos]);
  }
  return out;
}

}  // namespace

void english_context_slots(std::size_t en_len, std::span<const std::int32_t> a_ef,
                           std::size_t fg_len, std::size_t i,
                           const TrainConfig& config,
                           std::vector<ContextSlot>& out) {
  out.clear();
  const bool crosslingual = config.variant != Variant::kMono &&
                            a_ef[i] != kUnaligned &&
                            static_cast<std::size_t>(a_ef[i]) < fg_len;
  if (!crosslingual) {
    push_window(Side::kEnglish, en_len, i, config.d + 1, out);
    return;
  }
  const auto j = static_cast<std::size_t>(a_ef[i]);
  push_window(Side::kEnglish, en_len, i, config.d, out);
  push_window(Side::kForeign, fg_len, j, config.d_prime, out);
  out.push_back({Side::kForeign, j});
}

void foreign_context_slots(std::size_t fg_len, std::span<const std::int32_t> a_fe,
                           std::size_t en_len, std::size_t j,
                           const TrainConfig& config,
                           std::vector<ContextSlot>& out) {
  out.clear();
  if (config.variant == Variant::kMono) return;
  push_window(Side::kForeign, fg_len, j, config.d, out);
  if (config.variant != Variant::kFull) return;
  if (a_fe[j] == kUnaligned || static_cast<std::size_t>(a_fe[j]) >= en_len) {
    return;
  }
  const auto i = static_cast<std::size_t>(a_fe[j]);
  push_window(Side::kEnglish, en_len, i, config.d_prime, out);
  out.push_back({Side::kEnglish, i});
}

std::vector<Token> build_english_context(const AlignedSentencePair& pair,
                                         std::size_t i,
                                         const TrainConfig& config) {
  std::vector<ContextSlot> slots;
  english_context_slots(pair.en.size(), pair.a_ef, pair.fg.size(), i, config,
                        slots);
  return slots_to_tokens(pair, slots);
}

std::vector<Token> build_foreign_context(const AlignedSentencePair& pair,
                                         std::size_t j,
                                         const TrainConfig& config) {
  std::vector<ContextSlot> slots;
  foreign_context_slots(pair.fg.size(), pair.a_fe, pair.en.size(), j, config,
                        slots);
  return slots_to_tokens(pair, slots);
}

void draw_negatives(const NoiseTable& table, WordId positive, std::size_t count,
                    Rng& rng, std::vector<WordId>& out) {
  out.clear();
  for (std::size_t n = 0; n < count; ++n) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      const WordId id = table.sample(rng);
      if (id != positive) {
        out.push_back(id);
        break;
      }
    }
  }
}

double negative_sampling_objective(std::span<const Real> x,
                                   std::span<const std::span<const Real>> contexts,
                                   double weight) {
  double total = 0;
  for (std::size_t j = 0; j < contexts.size(); ++j) {
    const double t = dot(contexts[j], x);
    total += j == 0 ? log_sigmoid(t) : log_sigmoid(-t);
  }
  return weight * total;
}

void negative_sampling_gradient(std::span<const Real> x,
                                std::span<const std::span<const Real>> contexts,
                                double weight, std::span<Real> grad_x,
                                std::span<const std::span<Real>> grad_contexts) {
  for (std::size_t j = 0; j < contexts.size(); ++j) {
    const double t = dot(contexts[j], x);
    // d/dt log sigma(t) = 1 - sigma(t); d/dt log sigma(-t) = -sigma(t).
    // Zero outside the clamp, where the objective is flat.
    double g = 0;
    if (std::abs(t) < kMaxDot) g = j == 0 ? 1.0 - sigmoid(t) : -sigmoid(t);
    g *= weight;
    if (g == 0) continue;
    const Real* c = contexts[j].data();
    Real* gc = grad_contexts[j].data();
    for (std::size_t i = 0; i < x.size(); ++i) {
      grad_x[i] += g * c[i];
      gc[i] += g * x[i];
    }
  }
}

namespace {

// Wires contexts[0] = ctx(y), contexts[1..] = ctx(negatives) and zeroed
// gradient rows into the scratch buffers.
void prepare_rows(SenseModel& model, ContextWord y,
                  std::span<const WordId> negatives, UpdateScratch& s) {
  const std::size_t dim = model.config.dim;
  const std::size_t n = 1 + negatives.size();
  s.grad_x.assign(dim, 0.0);
  s.grad_ctx.assign(n * dim, 0.0);
  s.ctx_rows.clear();
  s.grad_rows.clear();
  s.ctx_rows.push_back(context_vector(model, y));
  for (WordId neg : negatives) {
    s.ctx_rows.push_back(context_vector(model, ContextWord{y.side, neg}));
  }
  for (std::size_t j = 0; j < n; ++j) {
    s.grad_rows.emplace_back(s.grad_ctx.data() + j * dim, dim);
  }
}

void apply_context_gradients(SenseModel& model, ContextWord y,
                             std::span<const WordId> negatives, double lr,
                             UpdateScratch& s) {
  axpy(lr, s.grad_rows[0], context_vector(model, y));
  for (std::size_t j = 0; j < negatives.size(); ++j) {
    axpy(lr, s.grad_rows[j + 1],
         context_vector(model, ContextWord{y.side, negatives[j]}));
  }
}

}  // namespace

void gradient_step_theta(SenseModel& model, WordId x_en,
                         std::span<const double> senses, ContextWord y,
                         std::span<const WordId> negatives, double lr,
                         UpdateScratch& scratch) {
  if (lr == 0) return;
  prepare_rows(model, y, negatives, scratch);
  const double eps = model.config.epsilon;
  // Each sense vector appears only in its own term, so it can be stepped as
  // soon as its gradient is known; context rows are stepped once at the end
  // so every term sees the same context values.
  for (std::size_t k = 0; k < senses.size(); ++k) {
    if (!(senses[k] > eps)) continue;
    auto x = model.sense(x_en, k);
    std::fill(scratch.grad_x.begin(), scratch.grad_x.end(), 0.0);
    negative_sampling_gradient(x, scratch.ctx_rows, senses[k], scratch.grad_x,
                               scratch.grad_rows);
    axpy(lr, scratch.grad_x, x);
  }
  apply_context_gradients(model, y, negatives, lr, scratch);
}

void skip_gram_update(SenseModel& model, WordId x_fg, ContextWord y,
                      std::span<const WordId> negatives, double lr,
                      UpdateScratch& scratch) {
  if (lr == 0) return;
  prepare_rows(model, y, negatives, scratch);
  auto x = model.in_fg.row(x_fg);
  negative_sampling_gradient(x, scratch.ctx_rows, 1.0, scratch.grad_x,
                             scratch.grad_rows);
  axpy(lr, scratch.grad_x, x);
  apply_context_gradients(model, y, negatives, lr, scratch);
}

double learning_rate(std::uint64_t t, std::uint64_t total, double lr0) {
  const double floor = lr0 * 1e-4;
  if (total == 0) return floor;
  const double frac =
      1.0 - static_cast<double>(t) / static_cast<double>(total);
  return std::max(lr0 * frac, floor);
}

}  // namespace parasense

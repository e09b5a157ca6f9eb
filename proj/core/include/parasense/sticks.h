#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace parasense {

// Per-word expected sense counts n[w][k] that parameterise the truncated
// stick-breaking posterior q(beta_wk) = Beta(1 + n[w][k], alpha + sum_{r>k}
// n[w][r]). The last stick takes the remaining mass.
class StickStats {
 public:
  StickStats() = default;
  StickStats(std::size_t words, std::uint32_t t_max)
      : t_max_(t_max), counts_(words * t_max, 0.0) {}

  std::uint32_t t_max() const noexcept { return t_max_; }
  std::size_t words() const noexcept {
    return t_max_ == 0 ? 0 : counts_.size() / t_max_;
  }

  std::span<const double> row(std::size_t w) const {
    return {counts_.data() + w * t_max_, t_max_};
  }
  std::span<double> row(std::size_t w) {
    return {counts_.data() + w * t_max_, t_max_};
  }

  // n[w] += q
  void accumulate(std::size_t w, std::span<const double> q);
  // n[w] <- (1 - rho) n[w] + rho * frequency * q
  void blend(std::size_t w, std::span<const double> q, double rho,
             double frequency);

  std::span<const double> raw() const noexcept { return counts_; }
  std::vector<double>& raw_mutable() noexcept { return counts_; }

  friend bool operator==(const StickStats&, const StickStats&) = default;

 private:
  std::uint32_t t_max_ = 0;
  std::vector<double> counts_;
};

// E_q[log p(z = k)] for every k, written into `out` (size T).
void expected_log_prior(std::span<const double> counts, double alpha,
                        std::span<double> out);
std::vector<double> expected_log_prior(std::span<const double> counts,
                                       double alpha);

// p_k = E[beta_k] prod_{r<k} (1 - E[beta_r]); the last entry is the
// remaining mass so the vector sums to one.
void expected_sense_prior(std::span<const double> counts, double alpha,
                          std::span<double> out);
std::vector<double> expected_sense_prior(std::span<const double> counts,
                                         double alpha);

}  // namespace parasense

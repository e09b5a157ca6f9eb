#include "parasense/sticks.h"

#include <boost/math/special_functions/digamma.hpp>

namespace parasense {

void StickStats::accumulate(std::size_t w, std::span<const double> q) {
  auto n = row(w);
  for (std::size_t k = 0; k < n.size(); ++k) n[k] += q[k];
}

void StickStats::blend(std::size_t w, std::span<const double> q, double rho,
                       double frequency) {
  auto n = row(w);
  for (std::size_t k = 0; k < n.size(); ++k) {
    n[k] += rho * (frequency * q[k] - n[k]);
  }
}

void expected_log_prior(std::span<const double> counts, double alpha,
                        std::span<double> out) {
  using boost::math::digamma;
  const std::size_t t = counts.size();
  double tail = 0;
  for (double c : counts) tail += c;
  double log_remaining = 0;  // sum_{r<k} E[log(1 - beta_r)]
  for (std::size_t k = 0; k + 1 < t; ++k) {
    tail -= counts[k];
    if (tail < 0) tail = 0;
    const double a = 1 + counts[k];
    const double b = alpha + tail;
    const double psi_ab = digamma(a + b);
    out[k] = digamma(a) - psi_ab + log_remaining;
    log_remaining += digamma(b) - psi_ab;
  }
  if (t > 0) out[t - 1] = log_remaining;
}

std::vector<double> expected_log_prior(std::span<const double> counts,
                                       double alpha) {
  std::vector<double> out(counts.size());
  expected_log_prior(counts, alpha, out);
  return out;
}

void expected_sense_prior(std::span<const double> counts, double alpha,
                          std::span<double> out) {
  const std::size_t t = counts.size();
  double tail = 0;
  for (double c : counts) tail += c;
  double remaining = 1;
  for (std::size_t k = 0; k + 1 < t; ++k) {
    tail -= counts[k];
    if (tail < 0) tail = 0;
    const double a = 1 + counts[k];
    const double b = alpha + tail;
    const double mean = a / (a + b);
    out[k] = mean * remaining;
    remaining *= b / (a + b);
  }
  if (t > 0) out[t - 1] = remaining;
}

std::vector<double> expected_sense_prior(std::span<const double> counts,
                                         double alpha) {
  std::vector<double> out(counts.size());
  expected_sense_prior(counts, alpha, out);
  return out;
}

}  // namespace parasense

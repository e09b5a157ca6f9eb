#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace parasense {

// Full: English senses see crosslingual context and foreign words see
// English context. OneSided: foreign words only see foreign context.
// Mono: English side only, foreign data is ignored.
enum class Variant : std::uint8_t { kFull = 0, kOneSided = 1, kMono = 2 };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

struct TrainConfig {
  double alpha = 0.1;            // DP concentration
  std::uint32_t t_max = 10;      // truncation level, max senses per word
  std::uint32_t dim = 100;
  std::uint32_t d = 4;           // English window
  std::uint32_t d_prime = 0;     // crosslingual window
  double epsilon = 0.001;        // sense activity threshold
  double lr0 = 0.025;
  std::uint32_t iterations = 10;
  std::uint32_t negatives = 5;
  double noise_power = 0.75;
  std::uint32_t min_count = 5;
  Variant variant = Variant::kFull;
  std::uint64_t seed = 1;
  // Frequent-word subsampling threshold; 0 disables it.
  double subsample = 0;
  // Stick statistics step size. 0 means plain accumulation n += q(z); a
  // value in (0, 1] blends towards count(w) * q(z) at that rate.
  double stick_decay = 0;

  // Throws UsageError naming the first violated constraint.
  void validate() const;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

// One line, `key=value` pairs, in a stable order.
std::string describe(const TrainConfig& config);

}  // namespace parasense

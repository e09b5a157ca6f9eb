#include "parasense/config.h"

#include <cmath>
#include <sstream>

#include "parasense/error.h"

namespace parasense {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kFull:
      return "full";
    case Variant::kOneSided:
      return "one-sided";
    case Variant::kMono:
      return "mono";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  if (name == "full") return Variant::kFull;
  if (name == "one-sided" || name == "onesided") return Variant::kOneSided;
  if (name == "mono") return Variant::kMono;
  throw UsageError("unknown variant \"" + std::string(name) +
                   "\" (expected full, one-sided or mono)");
}

void TrainConfig::validate() const {
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    throw UsageError("alpha must be > 0");
  }
  if (t_max < 1) throw UsageError("T must be >= 1");
  if (dim < 1) throw UsageError("dim must be >= 1");
  if (!(epsilon >= 0 && epsilon < 1)) {
    throw UsageError("epsilon must lie in [0, 1)");
  }
  if (!(lr0 > 0) || !std::isfinite(lr0)) throw UsageError("lr must be > 0");
  if (iterations < 1) throw UsageError("iterations must be >= 1");
  if (negatives < 1) throw UsageError("negatives must be >= 1");
  if (!(noise_power >= 0)) throw UsageError("noise power must be >= 0");
  if (!(subsample >= 0)) throw UsageError("subsample must be >= 0");
  if (!(stick_decay >= 0 && stick_decay <= 1)) {
    throw UsageError("stick decay must lie in [0, 1]");
  }
  if (variant == Variant::kMono && d_prime > 0) {
    throw UsageError("mono variant has no crosslingual window; d' must be 0");
  }
}

std::string describe(const TrainConfig& c) {
  std::ostringstream os;
  os << "alpha=" << c.alpha << " T=" << c.t_max << " dim=" << c.dim
     << " d=" << c.d << " d'=" << c.d_prime << " epsilon=" << c.epsilon
     << " lr=" << c.lr0 << " iters=" << c.iterations
     << " negatives=" << c.negatives << " noise_power=" << c.noise_power
     << " min_count=" << c.min_count << " variant=" << to_string(c.variant)
     << " seed=" << c.seed;
  if (c.subsample > 0) os << " subsample=" << c.subsample;
  if (c.stick_decay > 0) os << " stick_decay=" << c.stick_decay;
  return os.str();
}

}  // namespace parasense

#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace parasense {

// mt19937_64 plus explicit helpers so draws do not depend on the standard
// library's distribution implementations. The engine state round-trips
// through text for checkpoints.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 1) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n); modulo bias is below n / 2^64.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  std::string state() const {
    std::ostringstream os;
    os << engine_;
    return os.str();
  }

  void set_state(const std::string& s) {
    std::istringstream is(s);
    is >> engine_;
  }

  std::mt19937_64& engine() noexcept { return engine_; }

  friend bool operator==(const Rng& a, const Rng& b) {
    return a.engine_ == b.engine_;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace parasense

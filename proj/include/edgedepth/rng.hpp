#pragma once

#include <cstdint>
#include <random>

namespace edgedepth {

// Deterministic RNG wrapper. uniform_int_distribution is implementation
// defined, so sampling goes through plain modulo on the raw mt19937_64
// stream; the slight bias is irrelevant here and the sequences are
// reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish value in [0, k). k must be positive.
  int below(int k) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(k)); }

  int in_range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive

  bool coin() { return (eng_() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace edgedepth

#pragma once

#include <cstdint>

namespace lv {

// SplitMix64. Every randomized routine in the library takes one of these,
// seeded by the caller, so runs are reproducible bit-for-bit.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0.
  uint64_t below(uint64_t n) { return next() % n; }

  // Independent stream for worker i.
  Rng split(uint64_t i) const { return Rng(state_ ^ (0xa0761d6478bd642full * (i + 1))); }

 private:
  uint64_t state_;
};

}  // namespace lv

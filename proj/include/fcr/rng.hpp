#pragma once

#include <cstdint>

namespace fcr {

// splitmix64; fixed algorithm so that seeded runs are reproducible across
// platforms and standard library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // unbiased enough for test-instance generation; bound > 0
  uint64_t below(uint64_t bound) { return next() % bound; }

  Rng fork(uint64_t tag) { return Rng(next() ^ (0xa0761d6478bd642fULL * (tag + 1))); }

 private:
  uint64_t state_;
};

}  // namespace fcr

#pragma once

#include <cstdint>

namespace diamondpaths {

/// splitmix64: the generator state advances by the 64-bit golden-gamma
/// constant and each output is the mixed state:
///
///   state += 0x9e3779b97f4a7c15
///   z = state
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
///
/// Derived values are defined exactly as:
///   next_double()   = (next() >> 11) * 2^-53           (uniform in [0,1))
///   next_below(n)   = next() % n                       (n > 0)
/// so any implementation of this sequence reproduces every instance this
/// library generates from a given seed.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

}  // namespace diamondpaths

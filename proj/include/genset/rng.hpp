// Deterministic seeded randomness. Single documented mixer used everywhere:
// splitmix64. Derived streams (per trial, per retry) seed a fresh SplitMix
// with (seed ^ index) so any consumer can replay a single trial.

#pragma once

#include "genset/bits.hpp"

namespace genset {

inline u64 splitmix64_next(u64& state) {
  state += 0x9E3779B97F4A7C15ull;
  u64 z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct SplitMix {
  u64 state;
  explicit SplitMix(u64 seed) : state(seed) {}
  u64 next() { return splitmix64_next(state); }
  // Uniform in [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, n) by rejection, exact.
  u64 next_below(u64 n) {
    u64 lim = ~u64{0} - (~u64{0} % n);
    u64 x;
    do { x = next(); } while (x >= lim);
    return x % n;
  }
};

inline SplitMix derived_stream(u64 seed, u64 index) {
  return SplitMix(seed ^ index);
}

}  // namespace genset

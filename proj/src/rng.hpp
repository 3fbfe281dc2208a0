#pragma once

#include <cstdint>

namespace pheap::cli {

// splitmix64 (Steele, Lea, Flood). Hand-rolled so counter columns are
// bit-identical across runs and toolchains for a fixed seed.
struct splitmix64 {
  std::uint64_t state;

  explicit splitmix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform-ish value in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  std::int64_t signed64() { return static_cast<std::int64_t>(next()); }
};

}  // namespace pheap::cli

#pragma once

#include <cstdint>

namespace evalcode {

// SplitMix64 step: z = (state += 0x9E3779B97F4A7C15);
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
// return z ^ (z >> 31).
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output x * 0x2545F4914F6CDD1D.
// The state is seeded with one SplitMix64 step of the user seed (0 is remapped to a fixed
// nonzero constant). Bounded draws use rejection sampling so they are unbiased.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  // Uniform in [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;

 private:
  std::uint64_t state_;
};

// Seed for the attempt-th retry of a seeded construction.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt) noexcept;

}  // namespace evalcode

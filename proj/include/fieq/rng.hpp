#pragma once

// Self-contained 64-bit PRNG so generated instances are reproducible
// bit-for-bit from a seed alone: splitmix64 for seeding / substream
// derivation, xorshift64* for the stream itself.  Dyadic uniforms draw from
// a 2^-12 grid so that sums, differences and path sums of generated entries
// stay exactly representable in double precision.

#include <cmath>
#include <cstdint>

namespace fieq {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    state_ = splitmix64_next(s);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  // Substream c of a master seed; streams are independent xorshift states
  // seeded from consecutive splitmix64 outputs.
  static Rng substream(std::uint64_t master_seed, std::uint64_t stream) {
    std::uint64_t s = master_seed + stream * 0x9E3779B97F4A7C15ULL;
    return Rng(splitmix64_next(s));
  }

  std::uint64_t next_u64() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

  // Uniform on the dyadic grid {lo + k * 2^-12 : k = 0..(hi-lo)*4096},
  // inclusive of both ends.  lo and hi must themselves sit on the grid.
  double uniform_dyadic(double lo, double hi) {
    const double steps = (hi - lo) * 4096.0;
    const auto n = static_cast<std::uint64_t>(steps);
    return lo + static_cast<double>(next_below(n + 1)) * 0x1.0p-12;
  }

  // Standard normal via Box-Muller; each draw consumes two uniforms.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Random sign, +1 or -1.
  double sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

 private:
  std::uint64_t state_;
};

}  // namespace fieq

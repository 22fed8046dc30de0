#ifndef VACUUMPROBE_PRNG_HPP
#define VACUUMPROBE_PRNG_HPP

// Pinned reproducible randomness: std::mt19937_64 seeded directly, with
// uniform doubles taken as (x >> 11) * 2^-53. The standard fixes the
// mt19937_64 sequence, so identical seeds give identical artifacts on
// every platform.

#include <cstdint>
#include <random>

namespace vacuumprobe::numerics {

class Prng {
  public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform01() - 1.0; }

  private:
    std::mt19937_64 engine_;
};

} // namespace vacuumprobe::numerics

#endif

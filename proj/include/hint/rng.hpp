#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace hint {

// Seeded random source. Distributions are derived from the raw mt19937_64
// stream by hand because std::uniform_real_distribution and friends are
// implementation-defined; identical seeds must give identical streams on
// every toolchain.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
    std::uint64_t uniform_int(std::uint64_t n);

    // Standard normal via the Marsaglia polar method (stateless apart from
    // the engine, so serialising the engine captures everything).
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    std::string serialize() const;
    void deserialize(const std::string& text);

  private:
    std::mt19937_64 engine_;
};

}  // namespace hint

#pragma once

#include <cstdint>

namespace qeclab {

// Counter-based deterministic generator (SplitMix64 over a mixed key).
// Streams are fully determined by the key words, so per-trial streams like
// {master_seed, trial_index} reproduce bit-identically at any thread count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ GOLDEN)) {}
    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(mix(seed ^ GOLDEN) + mix(stream ^ SILVER))) {}

    std::uint64_t next() {
        state_ += GOLDEN;
        return mix(state_);
    }

    // uniform in [0, 1)
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool bernoulli(double p) { return uniform() < p; }

  private:
    static constexpr std::uint64_t GOLDEN = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t SILVER = 0xd1b54a32d192ed03ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace qeclab

#pragma once

#include <cstdint>
#include <random>

namespace netsens {

/// splitmix64 finalizer; used for seed mixing and stream derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Identifies one pseudo-random stream. The same (master_seed, stream_index)
/// pair always produces the same draws, on every platform. Streams for
/// sub-tasks are derived with derive(), which chains a 64-bit hash, so a
/// parallel scheduler can hand out independent streams without coordination.
struct RngSeed {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    /// Child stream i of this stream.
    [[nodiscard]] RngSeed derive(std::uint64_t i) const noexcept {
        return {master_seed, mix64(stream_index ^ mix64(i + 0x9e3779b97f4a7c15ULL))};
    }
};

/// Project-wide PRNG: a std::mt19937_64 engine (fully specified by the
/// standard, hence reproducible across compilers) seeded from the mixed
/// (master_seed, stream_index) pair. Bounded integers use rejection
/// sampling and doubles take the top 53 bits, so no draw depends on
/// implementation-defined distributions.
class Rng {
  public:
    explicit Rng(RngSeed seed)
        : engine_(mix64(mix64(seed.master_seed) ^ mix64(seed.stream_index + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t uniform_int(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return uniform() < p; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace netsens

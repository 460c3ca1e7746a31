#pragma once

#include <array>
#include <cstdint>

// Counter-based RNG. Each tile bit is a pure function of
// (master seed, replicate, generation, tile index), so sampling is
// independent of evaluation order and thread count, and any subset of
// tiles can be drawn lazily.

namespace perclab {

struct Philox4x32 {
    // Philox4x32-10 (Salmon et al.), standard round constants.
    static std::array<std::uint32_t, 4> block(std::uint64_t key,
                                              std::uint32_t c0, std::uint32_t c1,
                                              std::uint32_t c2, std::uint32_t c3);
};

struct TileSampler {
    std::uint64_t master = 0;
    std::uint32_t replicate = 0;
    std::uint32_t generation = 0;  // 0 = base sample, >0 = resample streams
    std::uint32_t domain = 0;      // independent stream families

    // 32-bit uniform word for a tile.
    std::uint32_t word(std::uint32_t tile) const;

    // Bernoulli(p) with p resolved at 2^-32; p<=0 and p>=1 are exact.
    bool open_bit(std::uint32_t tile, double p) const {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return word(tile) < threshold(p);
    }

    static std::uint32_t threshold(double p) {
        double t = p * 4294967296.0;
        if (t >= 4294967296.0) return 0xFFFFFFFFu;
        return static_cast<std::uint32_t>(t);
    }
};

// Uniform double in [0,1) from an arbitrary counter (bootstrap etc.).
double counter_uniform(std::uint64_t key, std::uint32_t c0, std::uint32_t c1,
                       std::uint32_t c2);

// Uniform integer in [0,n) from a counter.
std::uint32_t counter_below(std::uint64_t key, std::uint32_t c0, std::uint32_t c1,
                            std::uint32_t c2, std::uint32_t n);

}  // namespace perclab

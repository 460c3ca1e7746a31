#include "perclab/rng.hpp"

namespace perclab {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::uint32_t& c0, std::uint32_t& c1, std::uint32_t& c2,
                       std::uint32_t& c3, std::uint32_t k0, std::uint32_t k1) {
    std::uint64_t p0 = std::uint64_t(kPhiloxM0) * c0;
    std::uint64_t p1 = std::uint64_t(kPhiloxM1) * c2;
    std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
    std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
    std::uint32_t n0 = hi1 ^ c1 ^ k0;
    std::uint32_t n1 = lo1;
    std::uint32_t n2 = hi0 ^ c3 ^ k1;
    std::uint32_t n3 = lo0;
    c0 = n0; c1 = n1; c2 = n2; c3 = n3;
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(std::uint64_t key, std::uint32_t c0,
                                               std::uint32_t c1, std::uint32_t c2,
                                               std::uint32_t c3) {
    std::uint32_t k0 = std::uint32_t(key);
    std::uint32_t k1 = std::uint32_t(key >> 32);
    for (int r = 0; r < 10; ++r) {
        round_once(c0, c1, c2, c3, k0, k1);
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return {c0, c1, c2, c3};
}

std::uint32_t TileSampler::word(std::uint32_t tile) const {
    auto out = Philox4x32::block(master, replicate, generation, tile >> 2, domain);
    return out[tile & 3u];
}

double counter_uniform(std::uint64_t key, std::uint32_t c0, std::uint32_t c1,
                       std::uint32_t c2) {
    auto out = Philox4x32::block(key, c0, c1, c2, 0x9E3779B9u);
    std::uint64_t v = (std::uint64_t(out[0]) << 21) ^ out[1];
    return double(v & ((std::uint64_t(1) << 53) - 1)) / double(std::uint64_t(1) << 53);
}

std::uint32_t counter_below(std::uint64_t key, std::uint32_t c0, std::uint32_t c1,
                            std::uint32_t c2, std::uint32_t n) {
    auto out = Philox4x32::block(key, c0, c1, c2, 0x2545F491u);
    return std::uint32_t((std::uint64_t(out[0]) * n) >> 32);
}

}  // namespace perclab

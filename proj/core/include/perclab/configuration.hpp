#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "perclab/lattice.hpp"
#include "perclab/rng.hpp"

namespace perclab {

struct SeedLineage {
    std::uint64_t master = 0;
    std::uint32_t replicate = 0;
    std::uint32_t generation = 0;  // 0 = base sample
};

// One percolation sample: a bit per free tile, forced tiles pinned.
class Configuration {
public:
    Configuration(std::shared_ptr<const Lattice> lattice, double p, SeedLineage lineage);

    const Lattice& lattice() const { return *lattice_; }
    std::shared_ptr<const Lattice> lattice_ptr() const { return lattice_; }
    double p() const { return p_; }
    const SeedLineage& lineage() const { return lineage_; }

    bool open(TileId t) const { return states_[std::size_t(t)] != 0; }
    bool matches(TileId t, bool open_color) const { return open(t) == open_color; }

    // direct state access for tests and experiment plumbing
    std::vector<std::uint8_t>& states() { return states_; }
    const std::vector<std::uint8_t>& states() const { return states_; }
    void set_lineage(SeedLineage l) { lineage_ = l; }

private:
    std::shared_ptr<const Lattice> lattice_;
    std::vector<std::uint8_t> states_;
    double p_ = 0.5;
    SeedLineage lineage_{};
};

// Each free tile open with probability p, independently; a pure function of
// (master, replicate, tile).
Configuration sample_configuration(std::shared_ptr<const Lattice> lattice, double p,
                                   std::uint64_t master_seed, std::uint32_t replicate);

// Fresh i.i.d. bits inside tile_set (forced tiles ignored), everything else
// kept. resample_seed keys the fresh stream; reuse of a seed reproduces bits.
Configuration resample_region(const Configuration& config, std::span<const TileId> tile_set,
                              std::uint32_t resample_seed);

// In-place variant for hot loops (same bits as resample_region).
void resample_region_inplace(Configuration& config, std::span<const TileId> tile_set,
                             std::uint32_t resample_seed);

// Lazy view with the same bits as sample_configuration, evaluated on demand.
struct LazyConfiguration {
    const Lattice* lattice = nullptr;
    TileSampler sampler{};
    double p = 0.5;

    LazyConfiguration(const Lattice& lat, double prob, std::uint64_t master,
                      std::uint32_t replicate, std::uint32_t generation = 0)
        : lattice(&lat), sampler{master, replicate, generation, 0}, p(prob) {}

    bool open(TileId t) const {
        Forced f = lattice->forced(t);
        if (f != Forced::free_tile) return f == Forced::always_open;
        return sampler.open_bit(std::uint32_t(t), p);
    }
};

}  // namespace perclab

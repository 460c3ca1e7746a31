#include "perclab/configuration.hpp"

#include <stdexcept>

namespace perclab {

Configuration::Configuration(std::shared_ptr<const Lattice> lattice, double p,
                             SeedLineage lineage)
    : lattice_(std::move(lattice)), p_(p), lineage_(lineage) {
    states_.assign(std::size_t(lattice_->tile_count()), 0);
}

Configuration sample_configuration(std::shared_ptr<const Lattice> lattice, double p,
                                   std::uint64_t master_seed, std::uint32_t replicate) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("sample_configuration: p must be in [0,1]");
    Configuration cfg(lattice, p, SeedLineage{master_seed, replicate, 0});
    const Lattice& lat = cfg.lattice();
    TileSampler s{master_seed, replicate, 0, 0};
    auto& st = cfg.states();
    for (TileId t = 0; t < lat.tile_count(); ++t) {
        Forced f = lat.forced(t);
        if (f == Forced::free_tile)
            st[std::size_t(t)] = s.open_bit(std::uint32_t(t), p) ? 1 : 0;
        else
            st[std::size_t(t)] = (f == Forced::always_open) ? 1 : 0;
    }
    return cfg;
}

void resample_region_inplace(Configuration& config, std::span<const TileId> tile_set,
                             std::uint32_t resample_seed) {
    const Lattice& lat = config.lattice();
    TileSampler s{config.lineage().master, config.lineage().replicate, resample_seed, 0};
    auto& st = config.states();
    for (TileId t : tile_set) {
        if (lat.forced(t) != Forced::free_tile) continue;  // forced states immutable
        st[std::size_t(t)] = s.open_bit(std::uint32_t(t), config.p()) ? 1 : 0;
    }
}

Configuration resample_region(const Configuration& config, std::span<const TileId> tile_set,
                              std::uint32_t resample_seed) {
    Configuration out = config;
    resample_region_inplace(out, tile_set, resample_seed);
    SeedLineage l = config.lineage();
    l.generation = resample_seed;
    out.set_lineage(l);
    return out;
}

}  // namespace perclab

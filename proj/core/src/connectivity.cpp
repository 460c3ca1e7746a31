#include "perclab/connectivity.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace perclab {

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = std::int32_t(i);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[std::size_t(x)] != x) {
            parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
            x = parent[std::size_t(x)];
        }
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::size_t(b)] = a;
    }
};

}  // namespace

std::vector<std::int32_t> clusters(const Configuration& config, bool color_open,
                                   std::span<const TileId> region) {
    if (region.empty()) throw std::invalid_argument("clusters: region is empty");
    const Lattice& lat = config.lattice();
    std::unordered_map<TileId, std::int32_t> local;
    local.reserve(region.size() * 2);
    for (std::size_t i = 0; i < region.size(); ++i)
        local.emplace(region[i], std::int32_t(i));
    UnionFind uf(region.size());
    TileId nb[8];
    for (std::size_t i = 0; i < region.size(); ++i) {
        TileId t = region[i];
        if (config.open(t) != color_open) continue;
        int n = lat.neighbors(t, nb);
        for (int k = 0; k < n; ++k) {
            auto it = local.find(nb[k]);
            if (it == local.end()) continue;
            if (config.open(nb[k]) != color_open) continue;
            uf.unite(std::int32_t(i), it->second);
        }
    }
    std::vector<std::int32_t> label(region.size(), -1);
    std::unordered_map<std::int32_t, std::int32_t> remap;
    std::int32_t next = 0;
    for (std::size_t i = 0; i < region.size(); ++i) {
        if (config.open(region[i]) != color_open) continue;
        std::int32_t r = uf.find(std::int32_t(i));
        auto [it, inserted] = remap.emplace(r, next);
        if (inserted) ++next;
        label[i] = it->second;
    }
    return label;
}

CrossingCheck has_crossing(const Configuration& config, const QuadGeometry& qg,
                           bool color_open) {
    CrossingCheck out;
    out.degenerate = qg.degenerate();
    if (qg.side(0).empty() || qg.side(2).empty()) return out;
    BfsScratch scratch;
    out.crossing = crossing_search(
        qg, [&](TileId t) { return config.open(t); }, color_open, scratch);
    return out;
}

CrossingCheck has_crossing(const Configuration& config, const Quad& quad,
                           bool color_open) {
    QuadGeometry qg(config.lattice(), quad);
    return has_crossing(config, qg, color_open);
}

std::optional<TilePath> crossing_witness(const Configuration& config,
                                         const QuadGeometry& qg, bool color_open) {
    if (qg.side(0).empty() || qg.side(2).empty()) return std::nullopt;
    BfsScratch scratch;
    std::vector<std::int32_t> parent;
    std::int32_t reached = -1;
    bool ok = crossing_search(
        qg, [&](TileId t) { return config.open(t); }, color_open, scratch, &parent,
        &reached);
    if (!ok) return std::nullopt;
    TilePath path;
    for (std::int32_t cur = reached; cur != -1; cur = parent[std::size_t(cur)])
        path.tiles.push_back(qg.tile(cur));
    std::reverse(path.tiles.begin(), path.tiles.end());
    return path;
}

std::optional<TilePath> crossing_witness(const Configuration& config, const Quad& quad,
                                         bool color_open) {
    QuadGeometry qg(config.lattice(), quad);
    return crossing_witness(config, qg, color_open);
}

DualityCheck check_duality(const Configuration& config, const QuadGeometry& qg) {
    DualityCheck out;
    out.conforming = qg.conforming();
    BfsScratch scratch;
    out.open_crossing = crossing_search(
        qg, [&](TileId t) { return config.open(t); }, true, scratch);
    // closed crossing joins sides 1 and 3: same search in the rotated frame
    struct RotatedView {
        const QuadGeometry* qg;
        const std::vector<std::int32_t>& side(int k) const {
            return qg->side((k + 1) % 4);
        }
        TileId tile(std::int32_t l) const { return qg->tile(l); }
        std::int32_t size() const { return qg->size(); }
        int local_neighbors(std::int32_t l, std::int32_t out[8]) const {
            return qg->local_neighbors(l, out);
        }
    } rot{&qg};
    out.closed_crossing = crossing_search(
        rot, [&](TileId t) { return config.open(t); }, false, scratch);
    out.holds = out.open_crossing != out.closed_crossing;
    return out;
}

DualityCheck check_duality(const Configuration& config, const Quad& quad) {
    QuadGeometry qg(config.lattice(), quad);
    return check_duality(config, qg);
}

}  // namespace perclab

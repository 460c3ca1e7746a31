#pragma once

#include <optional>
#include <span>
#include <vector>

#include "perclab/configuration.hpp"
#include "perclab/quad.hpp"

namespace perclab {

struct TilePath {
    std::vector<TileId> tiles;
};

struct CrossingCheck {
    bool crossing = false;
    bool degenerate = false;  // a side tile set was empty
};

struct DualityCheck {
    bool holds = false;  // open(0<->2) XOR closed(1<->3)
    bool conforming = false;
    bool open_crossing = false;
    bool closed_crossing = false;
};

// Reusable BFS scratch (epoch-marked, no clearing between calls).
class BfsScratch {
public:
    void reset(std::size_t n) {
        if (mark_.size() < n) mark_.assign(n, 0);
        if (++epoch_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            epoch_ = 1;
        }
        stack_.clear();
        parent_.clear();
    }
    bool seen(std::int32_t i) const { return mark_[std::size_t(i)] == epoch_; }
    void visit(std::int32_t i) { mark_[std::size_t(i)] = epoch_; }
    std::vector<std::int32_t>& stack() { return stack_; }
    std::vector<std::int32_t>& parent() { return parent_; }

private:
    std::vector<std::uint32_t> mark_;
    std::uint32_t epoch_ = 0;
    std::vector<std::int32_t> stack_;
    std::vector<std::int32_t> parent_;
};

// BFS over same-color region tiles from quad side 0 toward side 2.
// StateFn: bool(TileId) -> tile open? If parent != nullptr it receives the
// BFS tree (-1 roots) and `reached` the first target hit.
template <typename Geom, typename StateFn>
bool crossing_search(const Geom& qg, StateFn&& open_state, bool color_open,
                     BfsScratch& scratch, std::vector<std::int32_t>* parent = nullptr,
                     std::int32_t* reached = nullptr) {
    const std::size_t n = std::size_t(qg.size());
    scratch.reset(n);
    auto& stack = scratch.stack();
    // visited marks double as target flags via a parallel bit: track targets
    // in a small epoch-free boolean vector kept in scratch.parent()
    auto& target = scratch.parent();
    target.assign(n, 0);
    for (std::int32_t l : qg.side(2)) target[std::size_t(l)] = 1;
    if (parent) parent->assign(n, -1);
    for (std::int32_t l : qg.side(0)) {
        if (open_state(qg.tile(l)) != color_open) continue;
        if (scratch.seen(l)) continue;
        scratch.visit(l);
        if (target[std::size_t(l)]) {
            if (reached) *reached = l;
            return true;
        }
        stack.push_back(l);
    }
    std::size_t head = 0;
    std::int32_t nb[8];
    while (head < stack.size()) {
        std::int32_t cur = stack[head++];
        int cnt = qg.local_neighbors(cur, nb);
        for (int k = 0; k < cnt; ++k) {
            std::int32_t u = nb[k];
            if (scratch.seen(u)) continue;
            if (open_state(qg.tile(u)) != color_open) continue;
            scratch.visit(u);
            if (parent) (*parent)[std::size_t(u)] = cur;
            if (target[std::size_t(u)]) {
                if (reached) *reached = u;
                return true;
            }
            stack.push_back(u);
        }
    }
    return false;
}

// Union-find cluster labeling of same-color tiles inside `region`.
// Returns one label per region entry; tiles of the other color get -1.
std::vector<std::int32_t> clusters(const Configuration& config, bool color_open,
                                   std::span<const TileId> region);

CrossingCheck has_crossing(const Configuration& config, const QuadGeometry& qg,
                           bool color_open);
CrossingCheck has_crossing(const Configuration& config, const Quad& quad,
                           bool color_open);

std::optional<TilePath> crossing_witness(const Configuration& config,
                                         const QuadGeometry& qg, bool color_open);
std::optional<TilePath> crossing_witness(const Configuration& config, const Quad& quad,
                                         bool color_open);

// Open crossing side0<->side2 XOR closed crossing side1<->side3. Exact
// (holds for every configuration) on conforming quads.
DualityCheck check_duality(const Configuration& config, const Quad& quad);
DualityCheck check_duality(const Configuration& config, const QuadGeometry& qg);

}  // namespace perclab

#include "perclab/quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perclab {

GeomSide quad_side(Orientation o, int k) {
    static constexpr GeomSide horiz[4] = {GeomSide::left, GeomSide::bottom,
                                          GeomSide::right, GeomSide::top};
    static constexpr GeomSide vert[4] = {GeomSide::bottom, GeomSide::right,
                                         GeomSide::top, GeomSide::left};
    return o == Orientation::horizontal ? horiz[k] : vert[k];
}

GridRect quad_grid_rect(const Lattice& lattice, const Quad& q) {
    return GridRect{lattice.snap(q.x0), lattice.snap(q.y0), lattice.snap(q.x1),
                    lattice.snap(q.y1)};
}

Quad snap_quad(const Lattice& lattice, const Quad& q) {
    GridRect r = quad_grid_rect(lattice, q);
    return Quad{lattice.to_continuum(r.x0), lattice.to_continuum(r.y0),
                lattice.to_continuum(r.x1), lattice.to_continuum(r.y1), q.orientation};
}

QuadGeometry::QuadGeometry(const Lattice& lattice, const Quad& quad)
    : lattice_(&lattice), orientation_(quad.orientation) {
    rect_ = quad_grid_rect(lattice, quad);
    if (!rect_.valid())
        throw std::invalid_argument("quad: rectangle is degenerate at grid resolution");
    if (!lattice.bounds().contains_rect(rect_))
        throw std::invalid_argument("quad: rectangle extends outside the lattice");

    lattice.tiles_meeting_open_rect(rect_, tiles_);

    // side tile sets: clipped polygon meets the closed side segment
    for (int s = 0; s < 4; ++s) {
        GridSegment seg = side_segment(GeomSide(s));
        for (std::int32_t l = 0; l < size(); ++l) {
            if (polygon_intersects_segment(lattice.polygon(tiles_[std::size_t(l)]),
                                           seg.a, seg.b))
                geom_sides_[std::size_t(s)].push_back(l);
        }
        if (geom_sides_[std::size_t(s)].empty()) degenerate_ = true;
    }

    // adjacency restricted to the rectangle
    adj_start_.assign(tiles_.size() + 1, 0);
    std::vector<std::int32_t> tmp;
    tmp.reserve(tiles_.size() * 6);
    for (std::int32_t l = 0; l < size(); ++l) {
        adj_start_[std::size_t(l)] = std::int32_t(tmp.size());
        TileId t = tiles_[std::size_t(l)];
        TileId nb[8];
        int n = lattice.neighbors(t, nb);
        GridRect e = lattice.extent(t);
        bool deep = e.x0 > rect_.x0 && e.x1 < rect_.x1 && e.y0 > rect_.y0 &&
                    e.y1 < rect_.y1;
        for (int k = 0; k < n; ++k) {
            std::int32_t lu = local_index(nb[k]);
            if (lu < 0) continue;
            if (!deep) {
                GridSegment seg;
                if (!shared_edge(lattice.polygon_raw(t), lattice.polygon_raw(nb[k]), seg))
                    continue;
                if (seg.a == seg.b) continue;
                if (!segment_in_rect_positive(seg.a, seg.b, rect_)) continue;
            }
            tmp.push_back(lu);
        }
    }
    adj_start_[tiles_.size()] = std::int32_t(tmp.size());
    adj_ = std::move(tmp);

    conforming_ = !degenerate_;
}

std::int32_t QuadGeometry::local_index(TileId t) const {
    auto it = std::lower_bound(tiles_.begin(), tiles_.end(), t);
    if (it == tiles_.end() || *it != t) return -1;
    return std::int32_t(it - tiles_.begin());
}

const std::vector<std::int32_t>& QuadGeometry::side(int k) const {
    return geom_sides_[std::size_t(int(quad_side(orientation_, k)))];
}

const std::vector<std::int32_t>& QuadGeometry::geom_side(GeomSide s) const {
    return geom_sides_[std::size_t(int(s))];
}

int QuadGeometry::local_neighbors(std::int32_t local, std::int32_t out[8]) const {
    std::int32_t b = adj_start_[std::size_t(local)];
    std::int32_t e = adj_start_[std::size_t(local) + 1];
    int n = 0;
    for (std::int32_t k = b; k < e; ++k) out[n++] = adj_[std::size_t(k)];
    return n;
}

GridSegment QuadGeometry::side_segment(GeomSide s) const {
    switch (s) {
        case GeomSide::left:
            return {{rect_.x0, rect_.y0}, {rect_.x0, rect_.y1}};
        case GeomSide::bottom:
            return {{rect_.x0, rect_.y0}, {rect_.x1, rect_.y0}};
        case GeomSide::right:
            return {{rect_.x1, rect_.y0}, {rect_.x1, rect_.y1}};
        case GeomSide::top:
        default:
            return {{rect_.x0, rect_.y1}, {rect_.x1, rect_.y1}};
    }
}

GridPoint QuadGeometry::corner(GeomSide a, GeomSide b) const {
    bool left = (a == GeomSide::left || b == GeomSide::left);
    bool bottom = (a == GeomSide::bottom || b == GeomSide::bottom);
    bool right = (a == GeomSide::right || b == GeomSide::right);
    (void)right;
    return GridPoint{left ? rect_.x0 : rect_.x1, bottom ? rect_.y0 : rect_.y1};
}

bool is_conforming(const Lattice& lattice, const Quad& q) {
    GridRect r = quad_grid_rect(lattice, q);
    if (!r.valid()) return false;
    if (!lattice.bounds().contains_rect(r)) return false;
    // sides must land on the grid exactly
    const double u = lattice.unit();
    auto on_grid = [&](double v) {
        return std::abs(v / u - std::llround(v / u)) < 1e-9;
    };
    if (!on_grid(q.x0) || !on_grid(q.x1) || !on_grid(q.y0) || !on_grid(q.y1))
        return false;
    QuadGeometry g(lattice, q);
    return !g.degenerate();
}

}  // namespace perclab

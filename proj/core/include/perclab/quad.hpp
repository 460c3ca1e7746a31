#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "perclab/configuration.hpp"
#include "perclab/lattice.hpp"

namespace perclab {

enum class Orientation { horizontal, vertical };

// An axis-aligned quad: a rectangle with an orientation choosing which
// opposite side pair is crossed. Sides are numbered like the four marked
// boundary arcs of a topological quadrilateral: crossings join side 0 to
// side 2; sides 1 and 3 are the dual pair.
//
// horizontal: side0=left, side1=bottom, side2=right, side3=top
// vertical:   side0=bottom, side1=right, side2=top, side3=left
struct Quad {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    Orientation orientation = Orientation::horizontal;
};

enum class GeomSide : int { left = 0, bottom = 1, right = 2, top = 3 };

// geometric side carrying quad side index k (0..3)
GeomSide quad_side(Orientation o, int k);

// Per-lattice discretization of a quad: the region of tiles meeting the
// open rectangle, the four side tile sets, and adjacency restricted to the
// rectangle. Built once, reused across samples.
class QuadGeometry {
public:
    QuadGeometry(const Lattice& lattice, const Quad& quad);

    const Lattice& lattice() const { return *lattice_; }
    const GridRect& rect() const { return rect_; }
    Orientation orientation() const { return orientation_; }

    std::int32_t size() const { return std::int32_t(tiles_.size()); }
    TileId tile(std::int32_t local) const { return tiles_[std::size_t(local)]; }
    const std::vector<TileId>& tiles() const { return tiles_; }
    std::int32_t local_index(TileId t) const;  // -1 if not in region

    // local ids of tiles touching quad side k (0..3, orientation-mapped)
    const std::vector<std::int32_t>& side(int k) const;
    // local ids touching a geometric side
    const std::vector<std::int32_t>& geom_side(GeomSide s) const;

    bool degenerate() const { return degenerate_; }  // some side has no tiles
    bool conforming() const { return conforming_; }

    // neighbors in the region (shared edge meets the rectangle with
    // positive length)
    int local_neighbors(std::int32_t local, std::int32_t out[8]) const;

    GridPoint corner(GeomSide a, GeomSide b) const;  // shared rect corner

    // grid rect of the side segment
    GridSegment side_segment(GeomSide s) const;

private:
    const Lattice* lattice_;
    GridRect rect_;
    Orientation orientation_;
    std::vector<TileId> tiles_;
    std::vector<std::int32_t> adj_start_;
    std::vector<std::int32_t> adj_;
    std::array<std::vector<std::int32_t>, 4> geom_sides_;
    bool degenerate_ = false;
    bool conforming_ = false;
};

// Snap a continuum quad to the lattice grid (the resolution at which all
// quads are evaluated). Returns the snapped quad.
Quad snap_quad(const Lattice& lattice, const Quad& q);

// True if the quad is conforming for this lattice: grid-aligned, inside the
// bounds, and with all four side tile sets nonempty. Exact duality is
// guaranteed on conforming quads.
bool is_conforming(const Lattice& lattice, const Quad& q);

GridRect quad_grid_rect(const Lattice& lattice, const Quad& q);

}  // namespace perclab

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "perclab/geometry.hpp"

namespace perclab {

enum class LatticeKind { triangular_site, square_bond };

enum class Forced : std::uint8_t { free_tile, always_open, always_closed };

enum class TileShape : std::uint8_t { hexagon, octagon, square };

using TileId = std::int32_t;
constexpr TileId kNoTile = -1;

// Square-bond roles. Site tiles are always open, face tiles always closed,
// bond tiles carry the percolation bits (one octagon per lattice bond).
enum class SqRole : std::uint8_t { site, face, hbond, vbond };

// A finite trivalent tiling clipped to a bounding box. Geometry lives on an
// integer grid with spacing unit() = mesh/8; tiles, adjacency and roles are
// all arithmetic in the grid, nothing is stored per tile.
//
// triangular-site: brick-wall hexagons, 4x4 grid units per tile, rows offset
// by 2; the adjacency graph is the triangular lattice and every interior
// vertex is trivalent (two bricks of one row and one of the next).
//
// square-bond: the bathroom tiling. Octagon bond tiles (vertices
// {(+-3,+-1),(+-1,+-3)} around bond midpoints), 2x2 site squares at sites
// (always open) and 2x2 face squares at face centers (always closed);
// lattice step = 8 units = mesh.
class Lattice {
public:
    static constexpr GridCoord kStep = 8;  // grid units per mesh length

    LatticeKind kind() const { return kind_; }
    double mesh() const { return mesh_; }
    double unit() const { return unit_; }
    const GridRect& bounds() const { return bounds_; }

    TileId tile_count() const { return count_; }
    TileId free_count() const { return free_count_; }

    Forced forced(TileId t) const;
    TileShape shape(TileId t) const;
    Polygon polygon_raw(TileId t) const;  // unclipped
    Polygon polygon(TileId t) const;      // clipped to bounds()

    // continuum center of the (unclipped) tile
    void center(TileId t, double& x, double& y) const;

    // grid-aligned bounding extent of the unclipped tile
    GridRect extent(TileId t) const;

    // adjacency: fills out[] with neighbor ids (shared edge of positive
    // length inside bounds()); returns the count (<= 8)
    int neighbors(TileId t, TileId out[8]) const;

    // all tiles whose closed (clipped) polygon contains p; p must be inside
    // bounds(); returns count (<= 3 by trivalence)
    int tiles_at_point(GridPoint p, TileId out[4]) const;

    // tiles whose interior meets the open rectangle (r should be inside
    // bounds(); tiles are clipped to bounds first)
    void tiles_meeting_open_rect(const GridRect& r, std::vector<TileId>& out) const;

    // tiles whose clipped polygon meets the closed segment; the segment is
    // expected to be axis-aligned
    void tiles_meeting_segment(GridPoint a, GridPoint b, std::vector<TileId>& out) const;

    // ordered tiles touching a bounding-box side (0=left,1=bottom,2=right,3=top)
    std::vector<TileId> boundary_tiles(int side) const;

    // square-bond helpers
    SqRole sq_role(TileId t) const;
    void sq_index(TileId t, GridCoord& i, GridCoord& j) const;  // role indices
    TileId sq_tile(SqRole role, GridCoord i, GridCoord j) const;  // kNoTile if absent
    // the lattice bond segment (site to site) of a bond tile, grid coords
    GridSegment bond_segment(TileId t) const;

    // triangular helpers
    void tri_index(TileId t, GridCoord& row, GridCoord& col) const;
    TileId tri_tile(GridCoord row, GridCoord col) const;

    double to_continuum(GridCoord c) const { return double(c) * unit_; }
    GridCoord snap(double x) const;

    // debugging dump: tile centers, forced states, adjacency
    std::string to_json() const;

    friend Lattice build_lattice(LatticeKind kind, double mesh, double x0,
                                 double y0, double x1, double y1);

private:
    LatticeKind kind_ = LatticeKind::triangular_site;
    double mesh_ = 1.0;
    double unit_ = 0.125;
    GridRect bounds_{};
    TileId count_ = 0;
    TileId free_count_ = 0;

    // triangular layout
    GridCoord row_lo_ = 0, row_hi_ = 0;              // brick rows [row_lo, row_hi)
    std::vector<GridCoord> tri_col_lo_;              // per row
    std::vector<GridCoord> tri_col_count_;           // per row
    std::vector<TileId> tri_offset_;                 // per row id offset

    // square-bond layout: per-role inclusive index ranges and id offsets
    struct Range {
        GridCoord ilo = 0, ihi = -1, jlo = 0, jhi = -1;
        TileId offset = 0;
        GridCoord icount() const { return ihi >= ilo ? ihi - ilo + 1 : 0; }
        GridCoord jcount() const { return jhi >= jlo ? jhi - jlo + 1 : 0; }
        TileId count() const { return TileId(icount() * jcount()); }
        bool contains(GridCoord i, GridCoord j) const {
            return i >= ilo && i <= ihi && j >= jlo && j <= jhi;
        }
        TileId id(GridCoord i, GridCoord j) const {
            return offset + TileId((j - jlo) * icount() + (i - ilo));
        }
    };
    Range sq_[4];  // indexed by SqRole

    int raw_neighbors(TileId t, TileId out[8]) const;
    bool extent_strictly_inside(TileId t) const;
};

// Builds the tiling restricted to the given continuum box (snapped to the
// grid). Throws std::invalid_argument for nonpositive mesh or a box smaller
// than 2*mesh per side.
Lattice build_lattice(LatticeKind kind, double mesh, double x0, double y0,
                      double x1, double y1);

std::shared_ptr<const Lattice> build_lattice_shared(LatticeKind kind, double mesh,
                                                    double x0, double y0,
                                                    double x1, double y1);

const char* to_string(LatticeKind k);

}  // namespace perclab

#include "perclab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace perclab {

namespace {

GridCoord floor_div(GridCoord a, GridCoord b) {
    GridCoord q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

GridCoord ceil_div(GridCoord a, GridCoord b) { return -floor_div(-a, b); }

constexpr GridCoord kBrick = 4;  // triangular brick side in grid units

GridCoord tri_row_offset(GridCoord row) {
    // odd rows shifted by half a brick
    return (row & 1) ? 2 : 0;
}

// bond octagon vertices relative to the bond midpoint, CCW
constexpr GridPoint kOct[8] = {{-3, -1}, {-1, -3}, {1, -3}, {3, -1},
                               {3, 1},   {1, 3},   {-1, 3}, {-3, 1}};

}  // namespace

const char* to_string(LatticeKind k) {
    return k == LatticeKind::triangular_site ? "triangular-site" : "square-bond";
}

GridCoord Lattice::snap(double x) const {
    return static_cast<GridCoord>(std::llround(x / unit_));
}

Lattice build_lattice(LatticeKind kind, double mesh, double x0, double y0,
                      double x1, double y1) {
    if (!(mesh > 0.0)) throw std::invalid_argument("lattice: mesh must be positive");
    if (!(x1 > x0) || !(y1 > y0))
        throw std::invalid_argument("lattice: bbox is degenerate");
    if (x1 - x0 < 2.0 * mesh || y1 - y0 < 2.0 * mesh)
        throw std::invalid_argument("lattice: bbox sides must be at least 2*mesh");

    Lattice lat;
    lat.kind_ = kind;
    lat.mesh_ = mesh;
    lat.unit_ = mesh / double(Lattice::kStep);
    lat.bounds_ = GridRect{lat.snap(x0), lat.snap(y0), lat.snap(x1), lat.snap(y1)};
    if (!lat.bounds_.valid())
        throw std::invalid_argument("lattice: bbox collapses at grid resolution");
    const GridRect& b = lat.bounds_;

    if (kind == LatticeKind::triangular_site) {
        lat.row_lo_ = floor_div(b.y0, kBrick);
        lat.row_hi_ = floor_div(b.y1 - 1, kBrick) + 1;
        TileId id = 0;
        for (GridCoord j = lat.row_lo_; j < lat.row_hi_; ++j) {
            GridCoord off = tri_row_offset(j);
            GridCoord ilo = floor_div(b.x0 - off, kBrick);
            GridCoord ihi = floor_div(b.x1 - 1 - off, kBrick);
            lat.tri_col_lo_.push_back(ilo);
            lat.tri_col_count_.push_back(ihi - ilo + 1);
            lat.tri_offset_.push_back(id);
            id += TileId(ihi - ilo + 1);
        }
        lat.count_ = id;
        lat.free_count_ = id;
    } else {
        auto& sq = lat.sq_;
        auto set_range = [&](SqRole role, GridCoord ilo, GridCoord ihi, GridCoord jlo,
                             GridCoord jhi) {
            auto& r = sq[int(role)];
            r.ilo = ilo;
            r.ihi = ihi;
            r.jlo = jlo;
            r.jhi = jhi;
        };
        const GridCoord s = Lattice::kStep;
        // site squares [8I-1,8I+1]^2
        set_range(SqRole::site, ceil_div(b.x0, s), floor_div(b.x1, s),
                  ceil_div(b.y0, s), floor_div(b.y1, s));
        // face squares [8I+3,8I+5]^2
        set_range(SqRole::face, ceil_div(b.x0 - 4, s), floor_div(b.x1 - 4, s),
                  ceil_div(b.y0 - 4, s), floor_div(b.y1 - 4, s));
        // horizontal bond octagons: x in [8I+1,8I+7], y in [8J-3,8J+3]
        set_range(SqRole::hbond, ceil_div(b.x0 - 6, s), floor_div(b.x1 - 2, s),
                  ceil_div(b.y0 - 2, s), floor_div(b.y1 + 2, s));
        // vertical bond octagons: x in [8I-3,8I+3], y in [8J+1,8J+7]
        set_range(SqRole::vbond, ceil_div(b.x0 - 2, s), floor_div(b.x1 + 2, s),
                  ceil_div(b.y0 - 6, s), floor_div(b.y1 - 2, s));
        TileId id = 0;
        for (int r = 0; r < 4; ++r) {
            sq[r].offset = id;
            id += sq[r].count();
        }
        lat.count_ = id;
        lat.free_count_ = sq[int(SqRole::hbond)].count() + sq[int(SqRole::vbond)].count();
    }
    return lat;
}

std::shared_ptr<const Lattice> build_lattice_shared(LatticeKind kind, double mesh,
                                                    double x0, double y0, double x1,
                                                    double y1) {
    return std::make_shared<const Lattice>(build_lattice(kind, mesh, x0, y0, x1, y1));
}

Forced Lattice::forced(TileId t) const {
    if (kind_ == LatticeKind::triangular_site) return Forced::free_tile;
    SqRole r = sq_role(t);
    if (r == SqRole::site) return Forced::always_open;
    if (r == SqRole::face) return Forced::always_closed;
    return Forced::free_tile;
}

TileShape Lattice::shape(TileId t) const {
    if (kind_ == LatticeKind::triangular_site) return TileShape::hexagon;
    SqRole r = sq_role(t);
    return (r == SqRole::hbond || r == SqRole::vbond) ? TileShape::octagon
                                                      : TileShape::square;
}

SqRole Lattice::sq_role(TileId t) const {
    for (int r = 0; r < 3; ++r) {
        if (t < sq_[r + 1].offset) return SqRole(r);
    }
    return SqRole::vbond;
}

void Lattice::sq_index(TileId t, GridCoord& i, GridCoord& j) const {
    const Range& r = sq_[int(sq_role(t))];
    TileId rel = t - r.offset;
    j = r.jlo + rel / r.icount();
    i = r.ilo + rel % r.icount();
}

TileId Lattice::sq_tile(SqRole role, GridCoord i, GridCoord j) const {
    const Range& r = sq_[int(role)];
    if (!r.contains(i, j)) return kNoTile;
    return r.id(i, j);
}

void Lattice::tri_index(TileId t, GridCoord& row, GridCoord& col) const {
    // rows are short vectors; binary search the offset table
    auto it = std::upper_bound(tri_offset_.begin(), tri_offset_.end(), t);
    std::size_t k = std::size_t(it - tri_offset_.begin()) - 1;
    row = row_lo_ + GridCoord(k);
    col = tri_col_lo_[k] + (t - tri_offset_[k]);
}

TileId Lattice::tri_tile(GridCoord row, GridCoord col) const {
    if (row < row_lo_ || row >= row_hi_) return kNoTile;
    std::size_t k = std::size_t(row - row_lo_);
    GridCoord rel = col - tri_col_lo_[k];
    if (rel < 0 || rel >= tri_col_count_[k]) return kNoTile;
    return tri_offset_[k] + TileId(rel);
}

GridRect Lattice::extent(TileId t) const {
    if (kind_ == LatticeKind::triangular_site) {
        GridCoord row, col;
        tri_index(t, row, col);
        GridCoord x = tri_row_offset(row) + kBrick * col;
        GridCoord y = kBrick * row;
        return GridRect{x, y, x + kBrick, y + kBrick};
    }
    GridCoord i, j;
    sq_index(t, i, j);
    const GridCoord s = kStep;
    switch (sq_role(t)) {
        case SqRole::site:
            return GridRect{s * i - 1, s * j - 1, s * i + 1, s * j + 1};
        case SqRole::face:
            return GridRect{s * i + 3, s * j + 3, s * i + 5, s * j + 5};
        case SqRole::hbond:
            return GridRect{s * i + 1, s * j - 3, s * i + 7, s * j + 3};
        case SqRole::vbond:
        default:
            return GridRect{s * i - 3, s * j + 1, s * i + 3, s * j + 7};
    }
}

Polygon Lattice::polygon_raw(TileId t) const {
    Polygon p;
    if (kind_ == LatticeKind::triangular_site) {
        GridRect e = extent(t);
        GridCoord mid = (e.x0 + e.x1) / 2;
        // hexagon with T-junction vertices at edge midpoints
        p.push({e.x0, e.y0});
        p.push({mid, e.y0});
        p.push({e.x1, e.y0});
        p.push({e.x1, e.y1});
        p.push({mid, e.y1});
        p.push({e.x0, e.y1});
        return p;
    }
    GridCoord i, j;
    sq_index(t, i, j);
    SqRole role = sq_role(t);
    const GridCoord s = kStep;
    if (role == SqRole::site || role == SqRole::face) {
        GridRect e = extent(t);
        p.push({e.x0, e.y0});
        p.push({e.x1, e.y0});
        p.push({e.x1, e.y1});
        p.push({e.x0, e.y1});
        return p;
    }
    GridCoord cx = (role == SqRole::hbond) ? s * i + 4 : s * i;
    GridCoord cy = (role == SqRole::hbond) ? s * j : s * j + 4;
    for (const auto& v : kOct) p.push({cx + v.x, cy + v.y});
    return p;
}

Polygon Lattice::polygon(TileId t) const { return clip_polygon(polygon_raw(t), bounds_); }

void Lattice::center(TileId t, double& x, double& y) const {
    GridRect e = extent(t);
    x = 0.5 * (to_continuum(e.x0) + to_continuum(e.x1));
    y = 0.5 * (to_continuum(e.y0) + to_continuum(e.y1));
}

GridSegment Lattice::bond_segment(TileId t) const {
    GridCoord i, j;
    sq_index(t, i, j);
    SqRole role = sq_role(t);
    const GridCoord s = kStep;
    if (role == SqRole::hbond)
        return GridSegment{{s * i, s * j}, {s * (i + 1), s * j}};
    if (role == SqRole::vbond)
        return GridSegment{{s * i, s * j}, {s * i, s * (j + 1)}};
    throw std::invalid_argument("bond_segment: tile is not a bond tile");
}

bool Lattice::extent_strictly_inside(TileId t) const {
    GridRect e = extent(t);
    return e.x0 > bounds_.x0 && e.x1 < bounds_.x1 && e.y0 > bounds_.y0 &&
           e.y1 < bounds_.y1;
}

int Lattice::raw_neighbors(TileId t, TileId out[8]) const {
    int n = 0;
    auto add = [&](TileId u) {
        if (u != kNoTile) out[n++] = u;
    };
    if (kind_ == LatticeKind::triangular_site) {
        GridCoord row, col;
        tri_index(t, row, col);
        add(tri_tile(row, col - 1));
        add(tri_tile(row, col + 1));
        // rows offset by half a brick: even rows see {col-1, col} above and
        // below, odd rows see {col, col+1}
        GridCoord k0 = (row & 1) ? col : col - 1;
        add(tri_tile(row + 1, k0));
        add(tri_tile(row + 1, k0 + 1));
        GridCoord k1 = (row & 1) ? col : col - 1;
        add(tri_tile(row - 1, k1));
        add(tri_tile(row - 1, k1 + 1));
        return n;
    }
    GridCoord i, j;
    sq_index(t, i, j);
    switch (sq_role(t)) {
        case SqRole::site:
            add(sq_tile(SqRole::hbond, i - 1, j));
            add(sq_tile(SqRole::hbond, i, j));
            add(sq_tile(SqRole::vbond, i, j - 1));
            add(sq_tile(SqRole::vbond, i, j));
            break;
        case SqRole::face:
            add(sq_tile(SqRole::hbond, i, j));
            add(sq_tile(SqRole::hbond, i, j + 1));
            add(sq_tile(SqRole::vbond, i, j));
            add(sq_tile(SqRole::vbond, i + 1, j));
            break;
        case SqRole::hbond:
            add(sq_tile(SqRole::site, i, j));
            add(sq_tile(SqRole::site, i + 1, j));
            add(sq_tile(SqRole::face, i, j - 1));
            add(sq_tile(SqRole::face, i, j));
            add(sq_tile(SqRole::vbond, i, j));
            add(sq_tile(SqRole::vbond, i + 1, j));
            add(sq_tile(SqRole::vbond, i, j - 1));
            add(sq_tile(SqRole::vbond, i + 1, j - 1));
            break;
        case SqRole::vbond:
            add(sq_tile(SqRole::site, i, j));
            add(sq_tile(SqRole::site, i, j + 1));
            add(sq_tile(SqRole::face, i - 1, j));
            add(sq_tile(SqRole::face, i, j));
            add(sq_tile(SqRole::hbond, i - 1, j));
            add(sq_tile(SqRole::hbond, i, j));
            add(sq_tile(SqRole::hbond, i - 1, j + 1));
            add(sq_tile(SqRole::hbond, i, j + 1));
            break;
    }
    return n;
}

int Lattice::neighbors(TileId t, TileId out[8]) const {
    int n = raw_neighbors(t, out);
    if (extent_strictly_inside(t)) return n;  // all shared edges are interior
    int m = 0;
    for (int k = 0; k < n; ++k) {
        TileId u = out[k];
        if (extent_strictly_inside(u)) {
            out[m++] = u;
            continue;
        }
        GridSegment seg;
        if (!shared_edge(polygon_raw(t), polygon_raw(u), seg)) continue;
        if (seg.a == seg.b) continue;  // point contact only
        // the shared edge must survive clipping with positive length
        if (!segment_in_rect_positive(seg.a, seg.b, bounds_)) continue;
        out[m++] = u;
    }
    return m;
}

int Lattice::tiles_at_point(GridPoint p, TileId out[4]) const {
    int n = 0;
    auto test = [&](TileId t) {
        if (t == kNoTile) return;
        for (int k = 0; k < n; ++k)
            if (out[k] == t) return;
        GridRect e = extent(t);
        if (!e.contains(p)) return;
        if (shape(t) == TileShape::octagon) {
            if (!polygon_contains(polygon_raw(t), p)) return;
        }
        out[n++] = t;
    };
    if (kind_ == LatticeKind::triangular_site) {
        GridCoord j0 = floor_div(p.y, kBrick);
        for (GridCoord j : {j0, j0 - 1}) {
            GridCoord off = tri_row_offset(j);
            GridCoord i0 = floor_div(p.x - off, kBrick);
            test(tri_tile(j, i0));
            test(tri_tile(j, i0 - 1));
        }
        return n;
    }
    const GridCoord s = kStep;
    GridCoord i_site = floor_div(p.x + s / 2, s), j_site = floor_div(p.y + s / 2, s);
    test(sq_tile(SqRole::site, i_site, j_site));
    GridCoord i_face = floor_div(p.x - 4 + s / 2, s), j_face = floor_div(p.y - 4 + s / 2, s);
    test(sq_tile(SqRole::face, i_face, j_face));
    GridCoord ih = floor_div(p.x - 4 + s / 2, s), jh = floor_div(p.y + s / 2, s);
    for (GridCoord di : {GridCoord(0), GridCoord(-1), GridCoord(1)})
        test(sq_tile(SqRole::hbond, ih + di, jh));
    GridCoord iv = floor_div(p.x + s / 2, s), jv = floor_div(p.y - 4 + s / 2, s);
    for (GridCoord dj : {GridCoord(0), GridCoord(-1), GridCoord(1)})
        test(sq_tile(SqRole::vbond, iv, jv + dj));
    return n;
}

void Lattice::tiles_meeting_open_rect(const GridRect& r, std::vector<TileId>& out) const {
    out.clear();
    GridRect q{std::max(r.x0, bounds_.x0), std::max(r.y0, bounds_.y0),
               std::min(r.x1, bounds_.x1), std::min(r.y1, bounds_.y1)};
    if (!q.valid()) return;
    if (kind_ == LatticeKind::triangular_site) {
        GridCoord jlo = floor_div(q.y0, kBrick);
        GridCoord jhi = floor_div(q.y1 - 1, kBrick);
        for (GridCoord j = std::max(jlo, row_lo_); j <= std::min(jhi, row_hi_ - 1); ++j) {
            GridCoord off = tri_row_offset(j);
            GridCoord ilo = floor_div(q.x0 - off, kBrick);
            GridCoord ihi = floor_div(q.x1 - 1 - off, kBrick);
            std::size_t k = std::size_t(j - row_lo_);
            ilo = std::max(ilo, tri_col_lo_[k]);
            ihi = std::min(ihi, tri_col_lo_[k] + tri_col_count_[k] - 1);
            for (GridCoord i = ilo; i <= ihi; ++i) out.push_back(tri_tile(j, i));
        }
        return;
    }
    const GridCoord s = kStep;
    auto emit_role = [&](SqRole role, GridCoord ax0, GridCoord ax1, GridCoord ay0,
                         GridCoord ay1, bool exact) {
        // tiles with extent x in [s*i+ax0, s*i+ax1] etc.
        const Range& rg = sq_[int(role)];
        GridCoord ilo = std::max(rg.ilo, ceil_div(q.x0 - ax1 + 1, s));
        GridCoord ihi = std::min(rg.ihi, floor_div(q.x1 - ax0 - 1, s));
        GridCoord jlo = std::max(rg.jlo, ceil_div(q.y0 - ay1 + 1, s));
        GridCoord jhi = std::min(rg.jhi, floor_div(q.y1 - ay0 - 1, s));
        for (GridCoord j = jlo; j <= jhi; ++j)
            for (GridCoord i = ilo; i <= ihi; ++i) {
                TileId t = rg.id(i, j);
                if (exact) {
                    // octagons: the extent may overlap only at a cut corner
                    GridRect e = extent(t);
                    bool deep = e.x0 >= q.x0 && e.x1 <= q.x1 && e.y0 >= q.y0 &&
                                e.y1 <= q.y1;
                    if (!deep && !polygon_interior_meets_open_rect(polygon(t), q))
                        continue;
                }
                out.push_back(t);
            }
    };
    emit_role(SqRole::site, -1, 1, -1, 1, false);
    emit_role(SqRole::face, 3, 5, 3, 5, false);
    emit_role(SqRole::hbond, 1, 7, -3, 3, true);
    emit_role(SqRole::vbond, -3, 3, 1, 7, true);
    std::sort(out.begin(), out.end());
}

void Lattice::tiles_meeting_segment(GridPoint a, GridPoint b, std::vector<TileId>& out) const {
    out.clear();
    GridRect band{std::min(a.x, b.x) - kStep, std::min(a.y, b.y) - kStep,
                  std::max(a.x, b.x) + kStep, std::max(a.y, b.y) + kStep};
    std::vector<TileId> cand;
    tiles_meeting_open_rect(band, cand);
    for (TileId t : cand) {
        if (polygon_intersects_segment(polygon(t), a, b)) out.push_back(t);
    }
}

std::vector<TileId> Lattice::boundary_tiles(int side) const {
    GridPoint a, b;
    switch (side) {
        case 0: a = {bounds_.x0, bounds_.y0}; b = {bounds_.x0, bounds_.y1}; break;
        case 1: a = {bounds_.x0, bounds_.y0}; b = {bounds_.x1, bounds_.y0}; break;
        case 2: a = {bounds_.x1, bounds_.y0}; b = {bounds_.x1, bounds_.y1}; break;
        default: a = {bounds_.x0, bounds_.y1}; b = {bounds_.x1, bounds_.y1}; break;
    }
    std::vector<TileId> tiles;
    tiles_meeting_segment(a, b, tiles);
    bool vertical = (side == 0 || side == 2);
    std::sort(tiles.begin(), tiles.end(), [&](TileId u, TileId v) {
        GridRect eu = extent(u), ev = extent(v);
        GridCoord ku = vertical ? eu.y0 : eu.x0;
        GridCoord kv = vertical ? ev.y0 : ev.x0;
        if (ku != kv) return ku < kv;
        return u < v;
    });
    return tiles;
}

std::string Lattice::to_json() const {
    std::ostringstream os;
    os << "{\"kind\":\"" << to_string(kind_) << "\",\"mesh\":" << mesh_
       << ",\"unit\":" << unit_ << ",\"bounds\":[" << bounds_.x0 << "," << bounds_.y0
       << "," << bounds_.x1 << "," << bounds_.y1 << "],\"tiles\":[";
    for (TileId t = 0; t < count_; ++t) {
        if (t) os << ",";
        double cx, cy;
        center(t, cx, cy);
        os << "{\"id\":" << t << ",\"center\":[" << cx << "," << cy << "],\"forced\":"
           << int(forced(t)) << ",\"adj\":[";
        TileId nb[8];
        int n = neighbors(t, nb);
        for (int k = 0; k < n; ++k) {
            if (k) os << ",";
            os << nb[k];
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

}  // namespace perclab

#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <vector>

// Integer grid geometry. Every tile vertex lives on a grid with spacing
// u = mesh/8, so all incidence predicates are exact in 64-bit arithmetic.
// Continuum coordinates are grid * u.

namespace perclab {

using GridCoord = std::int64_t;

struct GridPoint {
    GridCoord x = 0;
    GridCoord y = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct GridRect {
    GridCoord x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // closed rectangle, x0<=x1, y0<=y1

    bool valid() const { return x0 < x1 && y0 < y1; }
    GridCoord width() const { return x1 - x0; }
    GridCoord height() const { return y1 - y0; }
    bool contains(GridPoint p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    bool contains_rect(const GridRect& r) const {
        return r.x0 >= x0 && r.x1 <= x1 && r.y0 >= y0 && r.y1 <= y1;
    }
    bool strictly_inside(GridPoint p) const {
        return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1;
    }
    friend bool operator==(const GridRect&, const GridRect&) = default;
};

struct GridSegment {
    GridPoint a, b;
};

// Convex polygon, counterclockwise. Tiles are at most octagons; clipping
// against a rectangle can add up to four more vertices.
struct Polygon {
    static constexpr int kMaxVerts = 16;
    int n = 0;
    std::array<GridPoint, kMaxVerts> v{};

    void push(GridPoint p) {
        assert(n < kMaxVerts);
        v[n++] = p;
    }
    GridPoint operator[](int i) const { return v[i]; }
    bool empty() const { return n == 0; }
};

inline std::int64_t cross(GridPoint o, GridPoint a, GridPoint b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Twice the signed area; positive for counterclockwise polygons.
std::int64_t polygon_area2(const Polygon& p);

// Closed-polygon membership (boundary counts).
bool polygon_contains(const Polygon& p, GridPoint q);

// Clip a convex CCW polygon against a closed rectangle (Sutherland-Hodgman).
// All tile edges have slope 0, infinity or +-1, so cuts land on the grid.
Polygon clip_polygon(const Polygon& p, const GridRect& r);

// True if the closed polygon meets the closed axis-aligned segment.
bool polygon_intersects_segment(const Polygon& p, GridPoint a, GridPoint b);

// True if the interior of the polygon meets the open rectangle, i.e. the
// clipped polygon has positive area.
bool polygon_interior_meets_open_rect(const Polygon& p, const GridRect& r);

// Shared boundary of two convex polygons that share (part of) an edge:
// returns the common segment, or a degenerate a==b segment when they only
// touch at a point, n=0 polygon convention is not used here.
bool shared_edge(const Polygon& a, const Polygon& b, GridSegment& out);

// Length^2 of a segment.
inline double segment_len2(GridPoint a, GridPoint b) {
    double dx = double(b.x - a.x), dy = double(b.y - a.y);
    return dx * dx + dy * dy;
}

// Euclidean distance between two segments (doubles; used for curve
// neighborhoods, not for exact incidence).
double segment_distance(double ax, double ay, double bx, double by,
                        double cx, double cy, double dx, double dy);

// Distance from a convex polygon (in continuum units, grid*unit) to a
// continuum segment; zero if they intersect.
double polygon_segment_distance(const Polygon& p, double unit,
                                double ax, double ay, double bx, double by);

// Intersection point parameter of segment [a,b] with segment [c,d] if they
// properly intersect; returns count of intersection params in t (0..2).
int segment_segment_params(double ax, double ay, double bx, double by,
                           double cx, double cy, double dx, double dy,
                           double* t);

// Does the closed segment meet the closed rectangle?
bool segment_meets_rect(GridPoint a, GridPoint b, const GridRect& r);

// Does the closed segment meet the *interior* of the rectangle?
bool segment_meets_open_rect(GridPoint a, GridPoint b, const GridRect& r);

// Exact: does segment [a,b] intersect the closed rectangle in a set of
// positive length (not just a point)?
bool segment_in_rect_positive(GridPoint a, GridPoint b, const GridRect& r);

}  // namespace perclab

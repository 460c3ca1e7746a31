#include "perclab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace perclab {

std::int64_t polygon_area2(const Polygon& p) {
    std::int64_t s = 0;
    for (int i = 0; i < p.n; ++i) {
        GridPoint a = p.v[i], b = p.v[(i + 1) % p.n];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

bool polygon_contains(const Polygon& p, GridPoint q) {
    for (int i = 0; i < p.n; ++i) {
        if (cross(p.v[i], p.v[(i + 1) % p.n], q) < 0) return false;
    }
    return p.n > 0;
}

namespace {

// One halfplane cut of the Sutherland-Hodgman clip. side(p) >= 0 keeps p.
template <typename Side, typename Cut>
Polygon clip_halfplane(const Polygon& in, Side side, Cut cut) {
    Polygon out;
    if (in.n == 0) return out;
    for (int i = 0; i < in.n; ++i) {
        GridPoint cur = in.v[i];
        GridPoint nxt = in.v[(i + 1) % in.n];
        std::int64_t sc = side(cur), sn = side(nxt);
        if (sc >= 0) {
            if (out.n == 0 || !(out.v[out.n - 1] == cur)) out.push(cur);
        }
        if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
            GridPoint ip = cut(cur, nxt);
            if (out.n == 0 || !(out.v[out.n - 1] == ip)) out.push(ip);
        }
    }
    // drop a duplicated closing vertex
    if (out.n >= 2 && out.v[0] == out.v[out.n - 1]) --out.n;
    return out;
}

GridPoint cut_x(GridPoint a, GridPoint b, GridCoord c) {
    // tile edges have slope 0, inf or +-1, so the division is exact
    std::int64_t dy = b.y - a.y, dx = b.x - a.x;
    assert(dx != 0);
    std::int64_t num = dy * (c - a.x);
    assert(num % dx == 0);
    return GridPoint{c, a.y + num / dx};
}

GridPoint cut_y(GridPoint a, GridPoint b, GridCoord c) {
    std::int64_t dx = b.x - a.x, dy = b.y - a.y;
    assert(dy != 0);
    std::int64_t num = dx * (c - a.y);
    assert(num % dy == 0);
    return GridPoint{a.x + num / dy, c};
}

}  // namespace

Polygon clip_polygon(const Polygon& p, const GridRect& r) {
    Polygon q = p;
    q = clip_halfplane(
        q, [&](GridPoint a) { return a.x - r.x0; },
        [&](GridPoint a, GridPoint b) { return cut_x(a, b, r.x0); });
    q = clip_halfplane(
        q, [&](GridPoint a) { return r.x1 - a.x; },
        [&](GridPoint a, GridPoint b) { return cut_x(a, b, r.x1); });
    q = clip_halfplane(
        q, [&](GridPoint a) { return a.y - r.y0; },
        [&](GridPoint a, GridPoint b) { return cut_y(a, b, r.y0); });
    q = clip_halfplane(
        q, [&](GridPoint a) { return r.y1 - a.y; },
        [&](GridPoint a, GridPoint b) { return cut_y(a, b, r.y1); });
    return q;
}

namespace {

bool on_segment(GridPoint a, GridPoint b, GridPoint q) {
    if (cross(a, b, q) != 0) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool segments_meet(GridPoint a, GridPoint b, GridPoint c, GridPoint d) {
    std::int64_t d1 = cross(c, d, a);
    std::int64_t d2 = cross(c, d, b);
    std::int64_t d3 = cross(a, b, c);
    std::int64_t d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

}  // namespace

bool polygon_intersects_segment(const Polygon& p, GridPoint a, GridPoint b) {
    if (p.n == 0) return false;
    if (polygon_contains(p, a) || polygon_contains(p, b)) return true;
    for (int i = 0; i < p.n; ++i) {
        if (segments_meet(p.v[i], p.v[(i + 1) % p.n], a, b)) return true;
    }
    return false;
}

bool polygon_interior_meets_open_rect(const Polygon& p, const GridRect& r) {
    Polygon c = clip_polygon(p, r);
    return c.n >= 3 && polygon_area2(c) > 0;
}

bool shared_edge(const Polygon& a, const Polygon& b, GridSegment& out) {
    // convex tiles sharing part of an edge do so along collinear edge pairs
    for (int i = 0; i < a.n; ++i) {
        GridPoint p0 = a.v[i], p1 = a.v[(i + 1) % a.n];
        for (int j = 0; j < b.n; ++j) {
            GridPoint q0 = b.v[j], q1 = b.v[(j + 1) % b.n];
            if (cross(p0, p1, q0) != 0 || cross(p0, p1, q1) != 0) continue;
            // collinear; overlap along the dominant axis
            auto key = [&](GridPoint t) {
                return (std::abs(p1.x - p0.x) >= std::abs(p1.y - p0.y)) ? t.x : t.y;
            };
            std::int64_t lo1 = std::min(key(p0), key(p1)), hi1 = std::max(key(p0), key(p1));
            std::int64_t lo2 = std::min(key(q0), key(q1)), hi2 = std::max(key(q0), key(q1));
            std::int64_t lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
            if (lo > hi) continue;
            auto at = [&](std::int64_t k) {
                // reconstruct the point on the common line with given key
                if (std::abs(p1.x - p0.x) >= std::abs(p1.y - p0.y)) {
                    std::int64_t dx = p1.x - p0.x;
                    if (dx == 0) return GridPoint{p0.x, k};
                    std::int64_t num = (p1.y - p0.y) * (k - p0.x);
                    return GridPoint{k, p0.y + num / dx};
                }
                std::int64_t dy = p1.y - p0.y;
                std::int64_t num = (p1.x - p0.x) * (k - p0.y);
                return GridPoint{p0.x + num / dy, k};
            };
            out.a = at(lo);
            out.b = at(hi);
            return true;
        }
    }
    return false;
}

namespace {

double point_segment_distance(double px, double py, double ax, double ay,
                              double bx, double by) {
    double vx = bx - ax, vy = by - ay;
    double wx = px - ax, wy = py - ay;
    double c1 = vx * wx + vy * wy;
    if (c1 <= 0) return std::hypot(px - ax, py - ay);
    double c2 = vx * vx + vy * vy;
    if (c2 <= c1) return std::hypot(px - bx, py - by);
    double t = c1 / c2;
    return std::hypot(px - (ax + t * vx), py - (ay + t * vy));
}

}  // namespace

double segment_distance(double ax, double ay, double bx, double by,
                        double cx, double cy, double dx, double dy) {
    // check proper intersection first
    auto orient = [](double ox, double oy, double px, double py, double qx, double qy) {
        return (px - ox) * (qy - oy) - (py - oy) * (qx - ox);
    };
    double d1 = orient(cx, cy, dx, dy, ax, ay);
    double d2 = orient(cx, cy, dx, dy, bx, by);
    double d3 = orient(ax, ay, bx, by, cx, cy);
    double d4 = orient(ax, ay, bx, by, dx, dy);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return 0.0;
    double best = point_segment_distance(ax, ay, cx, cy, dx, dy);
    best = std::min(best, point_segment_distance(bx, by, cx, cy, dx, dy));
    best = std::min(best, point_segment_distance(cx, cy, ax, ay, bx, by));
    best = std::min(best, point_segment_distance(dx, dy, ax, ay, bx, by));
    return best;
}

double polygon_segment_distance(const Polygon& p, double unit,
                                double ax, double ay, double bx, double by) {
    if (p.n == 0) return std::numeric_limits<double>::infinity();
    // inside test: either endpoint of the segment inside the polygon
    auto inside = [&](double x, double y) {
        for (int i = 0; i < p.n; ++i) {
            GridPoint u = p.v[i], v = p.v[(i + 1) % p.n];
            double cr = (v.x * unit - u.x * unit) * (y - u.y * unit) -
                        (v.y * unit - u.y * unit) * (x - u.x * unit);
            if (cr < 0) return false;
        }
        return true;
    };
    if (inside(ax, ay) || inside(bx, by)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < p.n; ++i) {
        GridPoint u = p.v[i], v = p.v[(i + 1) % p.n];
        best = std::min(best, segment_distance(u.x * unit, u.y * unit, v.x * unit,
                                               v.y * unit, ax, ay, bx, by));
        if (best == 0.0) break;
    }
    return best;
}

int segment_segment_params(double ax, double ay, double bx, double by,
                           double cx, double cy, double dx, double dy,
                           double* t) {
    double rx = bx - ax, ry = by - ay;
    double sx = dx - cx, sy = dy - cy;
    double denom = rx * sy - ry * sx;
    double qpx = cx - ax, qpy = cy - ay;
    if (denom == 0.0) return 0;  // parallel; overlap handled by callers via endpoints
    double tt = (qpx * sy - qpy * sx) / denom;
    double uu = (qpx * ry - qpy * rx) / denom;
    if (tt < 0 || tt > 1 || uu < 0 || uu > 1) return 0;
    t[0] = tt;
    return 1;
}

bool segment_meets_rect(GridPoint a, GridPoint b, const GridRect& r) {
    if (r.contains(a) || r.contains(b)) return true;
    GridPoint c0{r.x0, r.y0}, c1{r.x1, r.y0}, c2{r.x1, r.y1}, c3{r.x0, r.y1};
    return segments_meet(a, b, c0, c1) || segments_meet(a, b, c1, c2) ||
           segments_meet(a, b, c2, c3) || segments_meet(a, b, c3, c0);
}

bool segment_in_rect_positive(GridPoint a, GridPoint b, const GridRect& r) {
    // parametric interval [lo, hi] as exact fractions num/den, den > 0
    std::int64_t lo_n = 0, lo_d = 1, hi_n = 1, hi_d = 1;
    auto tighten = [&](std::int64_t delta, std::int64_t w0, std::int64_t w1) {
        // coordinate travels a + t*delta, window [w0, w1] relative to a
        if (delta == 0) return w0 <= 0 && 0 <= w1;
        std::int64_t d = delta, n0 = w0, n1 = w1;
        if (d < 0) {
            d = -d;
            std::swap(n0, n1);
            n0 = -n0;
            n1 = -n1;
        }
        // t >= n0/d
        if (n0 * lo_d > lo_n * d) { lo_n = n0; lo_d = d; }
        // t <= n1/d
        if (n1 * hi_d < hi_n * d) { hi_n = n1; hi_d = d; }
        return true;
    };
    if (!tighten(b.x - a.x, r.x0 - a.x, r.x1 - a.x)) return false;
    if (!tighten(b.y - a.y, r.y0 - a.y, r.y1 - a.y)) return false;
    return lo_n * hi_d < hi_n * lo_d;  // strict: positive length
}

bool segment_meets_open_rect(GridPoint a, GridPoint b, const GridRect& r) {
    // the midpoint of the clipped part is interior iff the segment enters
    if (!segment_meets_rect(a, b, r)) return false;
    if (r.strictly_inside(a) || r.strictly_inside(b)) return true;
    // clip parametrically in doubles; exactness is not needed here because
    // callers use this only for strictly transversal configurations
    double t0 = 0.0, t1 = 1.0;
    double dx = double(b.x - a.x), dy = double(b.y - a.y);
    auto clipc = [&](double p, double q) {
        if (p == 0.0) return q >= 0.0;
        double rr = q / p;
        if (p < 0) {
            if (rr > t1) return false;
            if (rr > t0) t0 = rr;
        } else {
            if (rr < t0) return false;
            if (rr < t1) t1 = rr;
        }
        return true;
    };
    if (!clipc(-dx, double(a.x - r.x0))) return false;
    if (!clipc(dx, double(r.x1 - a.x))) return false;
    if (!clipc(-dy, double(a.y - r.y0))) return false;
    if (!clipc(dy, double(r.y1 - a.y))) return false;
    if (t0 >= t1) return false;
    double mx = a.x + 0.5 * (t0 + t1) * dx;
    double my = a.y + 0.5 * (t0 + t1) * dy;
    return mx > r.x0 && mx < r.x1 && my > r.y0 && my < r.y1;
}

}  // namespace perclab

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gridroute/cell.hpp"
#include "gridroute/rational.hpp"

namespace gridroute {

// Convex polygon with exact rational vertices in counter-clockwise order.
// Fewer than 3 vertices marks a degenerate hull (point or segment); those are
// representable but rejected by routers that need 2-D structure.
struct Polygon {
    std::vector<Pt> vertices;

    bool degenerate() const { return vertices.size() < 3; }
    size_t size() const { return vertices.size(); }

    Rat min_x() const { return extreme(true, true); }
    Rat max_x() const { return extreme(true, false); }
    Rat min_y() const { return extreme(false, true); }
    Rat max_y() const { return extreme(false, false); }
    Rat width() const { return max_x() - min_x(); }
    Rat height() const { return max_y() - min_y(); }

   private:
    Rat extreme(bool use_x, bool want_min) const {
        if (vertices.empty()) throw std::logic_error("empty polygon");
        Rat best = use_x ? vertices[0].x : vertices[0].y;
        for (const Pt& p : vertices) {
            const Rat& v = use_x ? p.x : p.y;
            if (want_min ? (v < best) : (v > best)) best = v;
        }
        return best;
    }
};

inline Polygon make_polygon(std::vector<Pt> verts) {
    if (verts.empty()) throw std::invalid_argument("polygon needs at least one vertex");
    if (verts.size() == 2 && verts[0] == verts[1])
        throw std::invalid_argument("degenerate segment with equal endpoints");
    if (verts.size() >= 3) {
        const size_t n = verts.size();
        for (size_t i = 0; i < n; ++i) {
            const Pt& a = verts[i];
            const Pt& b = verts[(i + 1) % n];
            const Pt& c = verts[(i + 2) % n];
            if (cross(a, b, c) <= 0)
                throw std::invalid_argument("polygon vertices must be strictly convex CCW");
        }
    }
    return Polygon{std::move(verts)};
}

// Convex hull (monotone chain), collinear points dropped. Collinear or
// singleton input yields a degenerate 1- or 2-vertex polygon.
inline Polygon hull(std::vector<Pt> pts) {
    if (pts.empty()) throw std::invalid_argument("hull of empty point set");
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return Polygon{{pts[0]}};

    auto build = [&](bool lower) {
        std::vector<Pt> chain;
        for (size_t i = 0; i < pts.size(); ++i) {
            const Pt& p = lower ? pts[i] : pts[pts.size() - 1 - i];
            while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0)
                chain.pop_back();
            chain.push_back(p);
        }
        return chain;
    };
    std::vector<Pt> lo = build(true);
    std::vector<Pt> hi = build(false);
    std::vector<Pt> out(lo.begin(), lo.end() - 1);
    out.insert(out.end(), hi.begin(), hi.end() - 1);
    if (out.size() < 3) return Polygon{{pts.front(), pts.back()}};
    return make_polygon(std::move(out));
}

namespace detail {

// Half-plane A*x + B*y + C >= 0 (cross(a, b, p) for directed edge a->b).
struct HalfPlane {
    Rat a, b, c;
    Rat eval_x_part(const Rat& y) const { return -(b * y + c); }
};

inline std::vector<HalfPlane> half_planes(const Polygon& p) {
    std::vector<HalfPlane> hs;
    const size_t n = p.vertices.size();
    if (n >= 2) {
        // For n == 2 this yields the segment's two opposite half-planes,
        // pinning points to the supporting line; the bbox clamps the rest.
        for (size_t i = 0; i < n; ++i) {
            const Pt& u = p.vertices[i];
            const Pt& v = p.vertices[(i + 1) % n];
            hs.push_back(HalfPlane{u.y - v.y, v.x - u.x, (v.y - u.y) * u.x - (v.x - u.x) * u.y});
        }
    }
    return hs;
}

}  // namespace detail

inline bool point_in_polygon(const Polygon& poly, const Pt& p) {
    if (p.x < poly.min_x() || p.x > poly.max_x() || p.y < poly.min_y() || p.y > poly.max_y())
        return false;
    for (const auto& h : detail::half_planes(poly))
        if (h.a * p.x + h.b * p.y + h.c < 0) return false;
    return true;
}

inline bool point_strictly_inside(const Polygon& poly, const Pt& p) {
    if (poly.degenerate()) return false;
    for (const auto& h : detail::half_planes(poly))
        if (h.a * p.x + h.b * p.y + h.c <= 0) return false;
    return true;
}

// Integer x-interval of the polygon's section at integer height y.
// strict=true restricts to the open interior.
inline std::optional<std::pair<int64_t, int64_t>> row_interval(const Polygon& poly, int64_t y,
                                                               bool strict = false) {
    Rat ry(y);
    if (strict) {
        if (ry <= poly.min_y() || ry >= poly.max_y()) return std::nullopt;
    } else {
        if (ry < poly.min_y() || ry > poly.max_y()) return std::nullopt;
    }
    Int lo = rat_ceil(poly.min_x());
    Int hi = rat_floor(poly.max_x());
    for (const auto& h : detail::half_planes(poly)) {
        if (h.a == 0) {
            Rat val = h.b * ry + h.c;
            if (strict ? (val <= 0) : (val < 0)) return std::nullopt;
            continue;
        }
        Rat bound = h.eval_x_part(ry) / h.a;
        if (h.a > 0) {
            Int b = strict ? rat_floor(bound) + 1 : rat_ceil(bound);
            lo = std::max(lo, b);
        } else {
            Int b = strict ? rat_ceil(bound) - 1 : rat_floor(bound);
            hi = std::min(hi, b);
        }
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(to_i64(lo), to_i64(hi));
}

// Exactly the integer points in or on the polygon, decided by exact
// rational half-plane predicates; strict=true gives the open interior.
inline std::vector<Cell> lattice_points(const Polygon& poly, bool strict = false) {
    std::vector<Cell> out;
    if (poly.degenerate() && strict) return out;
    int64_t y0 = to_i64(rat_ceil(poly.min_y()));
    int64_t y1 = to_i64(rat_floor(poly.max_y()));
    for (int64_t y = y1; y >= y0; --y) {
        auto iv = row_interval(poly, y, strict);
        if (!iv) continue;
        for (int64_t x = iv->first; x <= iv->second; ++x)
            out.push_back(Cell{static_cast<int32_t>(x), static_cast<int32_t>(y)});
    }
    return out;
}

enum class SpineOrientation { vertical, horizontal, none };

struct SpineInfo {
    SpineOrientation orientation = SpineOrientation::none;
    Rat coordinate;       // shared x (vertical) or y (horizontal)
    Pt endpoints[2];      // both on the polygon boundary
};

// Vertical spine if the x-intervals of the top and bottom faces intersect
// (leftmost common x); horizontal analogously with the bottommost common y.
inline SpineInfo find_spine(const Polygon& poly) {
    auto face_interval = [&](bool use_y, const Rat& level) {
        Rat lo, hi;
        bool first = true;
        for (const Pt& v : poly.vertices) {
            const Rat& at = use_y ? v.y : v.x;
            const Rat& other = use_y ? v.x : v.y;
            if (at != level) continue;
            if (first || other < lo) lo = other;
            if (first || other > hi) hi = other;
            first = false;
        }
        return std::make_pair(lo, hi);
    };

    SpineInfo info;
    Rat ymax = poly.max_y(), ymin = poly.min_y();
    auto [t1, t2] = face_interval(true, ymax);
    auto [b1, b2] = face_interval(true, ymin);
    Rat lo = std::max(t1, b1), hi = std::min(t2, b2);
    if (lo <= hi) {
        info.orientation = SpineOrientation::vertical;
        info.coordinate = lo;
        info.endpoints[0] = Pt{lo, ymax};
        info.endpoints[1] = Pt{lo, ymin};
        return info;
    }
    Rat xmax = poly.max_x(), xmin = poly.min_x();
    auto [l1, l2] = face_interval(false, xmin);
    auto [r1, r2] = face_interval(false, xmax);
    Rat lo2 = std::max(l1, r1), hi2 = std::min(l2, r2);
    if (lo2 <= hi2) {
        info.orientation = SpineOrientation::horizontal;
        info.coordinate = lo2;
        info.endpoints[0] = Pt{xmin, lo2};
        info.endpoints[1] = Pt{xmax, lo2};
        return info;
    }
    return info;
}

// Horizontal shear (x, y) -> (x + m*y, y).
struct ShearMap {
    Rat m;

    Pt apply(const Pt& p) const { return Pt{p.x + m * p.y, p.y}; }
    Pt inverse(const Pt& p) const { return Pt{p.x - m * p.y, p.y}; }
};

// Shears a polygon with w <= h so the extreme-y points land on one vertical
// line; |m| <= 1 and w(out) <= 2 w(in).
inline std::pair<ShearMap, Polygon> shear_to_burger_bun(const Polygon& poly) {
    if (poly.height() == 0) throw std::invalid_argument("cannot shear a height-0 polygon");
    if (poly.width() > poly.height())
        throw std::invalid_argument("shear_to_burger_bun requires w <= h");
    Rat ymax = poly.max_y(), ymin = poly.min_y();
    Pt p, q;  // leftmost extreme points, for determinism
    bool have_p = false, have_q = false;
    for (const Pt& v : poly.vertices) {
        if (v.y == ymax && (!have_p || v.x < p.x)) p = v, have_p = true;
        if (v.y == ymin && (!have_q || v.x < q.x)) q = v, have_q = true;
    }
    ShearMap shear{(q.x - p.x) / (p.y - q.y)};
    if (shear.m > 1 || shear.m < -1) throw std::logic_error("shear factor exceeds 1");
    std::vector<Pt> mapped;
    mapped.reserve(poly.vertices.size());
    for (const Pt& v : poly.vertices) mapped.push_back(shear.apply(v));
    Polygon out = poly.vertices.size() >= 3 ? make_polygon(std::move(mapped))
                                            : Polygon{std::move(mapped)};
    return {shear, out};
}

inline Rat polygon_area(const Polygon& poly) {
    if (poly.degenerate()) return Rat(0);
    Rat s(0);
    const auto& v = poly.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const Pt& a = v[i];
        const Pt& b = v[(i + 1) % v.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s / 2;
}

inline Rat segment_length_upper_bound(const Pt& a, const Pt& b) {
    Rat dx = b.x - a.x, dy = b.y - a.y;
    return sqrt_upper_bound(dx * dx + dy * dy);
}

// Lower bound on the number of lattice points strictly inside a triangle with
// an axis-parallel side: ceil(Area - 2*Perimeter + 1), with the irrational
// perimeter replaced by an exact rational upper bound so the result only
// weakens. A return value below 1 carries no guarantee.
inline int64_t triangle_point_bound(const Polygon& tri) {
    if (tri.vertices.size() != 3) throw std::invalid_argument("triangle_point_bound needs a triangle");
    const auto& v = tri.vertices;
    bool axis = false;
    for (int i = 0; i < 3; ++i) {
        const Pt& a = v[i];
        const Pt& b = v[(i + 1) % 3];
        if (a.x == b.x || a.y == b.y) axis = true;
    }
    if (!axis) throw std::invalid_argument("triangle has no axis-parallel side");
    Rat perim_ub(0);
    for (int i = 0; i < 3; ++i) perim_ub += segment_length_upper_bound(v[i], v[(i + 1) % 3]);
    Rat bound = polygon_area(tri) - 2 * perim_ub + 1;
    return to_i64(rat_ceil(bound));
}

// Reflection axis a with 2a integral, so x -> 2a - x respects the lattice.
inline Rat mirror_axis(const Rat& spine_x) {
    if (is_integer(spine_x)) return spine_x;
    return Rat(rat_floor(spine_x)) + Rat(1, 2);
}

}  // namespace gridroute

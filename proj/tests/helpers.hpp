#pragma once

#include <random>
#include <vector>

#include "gridroute/geometry.hpp"
#include "gridroute/lattice.hpp"
#include "gridroute/schedule.hpp"

namespace testutil {

using namespace gridroute;

using Rng = std::mt19937_64;

// Uniform draw in [0, n) by rejection; avoids distribution portability quirks.
inline uint64_t rand_below(Rng& rng, uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
    uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

inline int64_t rand_range(Rng& rng, int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(rand_below(rng, static_cast<uint64_t>(hi - lo + 1)));
}

inline Rat rand_rat(Rng& rng, int64_t lo_num, int64_t hi_num, int64_t max_den = 4) {
    int64_t den = rand_range(rng, 1, max_den);
    return Rat(rand_range(rng, lo_num * den, hi_num * den), den);
}

// Brute-force membership oracle over the bounding box.
inline std::vector<Cell> lattice_points_bruteforce(const Polygon& poly) {
    std::vector<Cell> out;
    int64_t x0 = to_i64(rat_floor(poly.min_x())) - 1, x1 = to_i64(rat_ceil(poly.max_x())) + 1;
    int64_t y0 = to_i64(rat_floor(poly.min_y())) - 1, y1 = to_i64(rat_ceil(poly.max_y())) + 1;
    for (int64_t y = y1; y >= y0; --y)
        for (int64_t x = x0; x <= x1; ++x)
            if (point_in_polygon(poly, Pt{Rat(x), Rat(y)}))
                out.push_back(Cell{(int32_t)x, (int32_t)y});
    std::sort(out.begin(), out.end(), CellCanonicalLess{});
    return out;
}

inline std::vector<Cell> strict_interior_bruteforce(const Polygon& poly) {
    std::vector<Cell> out;
    int64_t x0 = to_i64(rat_floor(poly.min_x())) - 1, x1 = to_i64(rat_ceil(poly.max_x())) + 1;
    int64_t y0 = to_i64(rat_floor(poly.min_y())) - 1, y1 = to_i64(rat_ceil(poly.max_y())) + 1;
    for (int64_t y = y1; y >= y0; --y)
        for (int64_t x = x0; x <= x1; ++x)
            if (point_strictly_inside(poly, Pt{Rat(x), Rat(y)}))
                out.push_back(Cell{(int32_t)x, (int32_t)y});
    std::sort(out.begin(), out.end(), CellCanonicalLess{});
    return out;
}

inline Polygon random_convex_polygon(Rng& rng, int64_t box_w, int64_t box_h, int points = 12,
                                     int64_t max_den = 1) {
    while (true) {
        std::vector<Pt> pts;
        for (int i = 0; i < points; ++i)
            pts.push_back(Pt{rand_rat(rng, 0, box_w, max_den), rand_rat(rng, 0, box_h, max_den)});
        Polygon h = hull(pts);
        if (!h.degenerate()) return h;
    }
}

// Random ramp-like polygon sharing its bottom and left bounding-box edges,
// with corners (0,0), (w,0), (0,h).
inline Polygon random_ramp_polygon(Rng& rng, int64_t w, int64_t h, int extra = 6) {
    std::vector<Pt> pts = {make_pt(0, 0), make_pt(w, 0), make_pt(0, h)};
    for (int i = 0; i < extra; ++i)
        pts.push_back(Pt{Rat(rand_range(rng, 0, w)), Rat(rand_range(rng, 0, h))});
    return hull(pts);
}

inline LabeledConfig random_permutation_config(Rng& rng, GraphPtr g) {
    LabeledConfig c = identity_config(g);
    for (size_t i = c.tokens.size(); i > 1; --i)
        std::swap(c.tokens[i - 1], c.tokens[rand_below(rng, i)]);
    return c;
}

inline ColorConfig random_color_config(Rng& rng, GraphPtr g, int64_t blacks) {
    ColorConfig c{g, std::vector<uint8_t>(g->size(), 0)};
    std::fill(c.black.begin(), c.black.begin() + blacks, uint8_t(1));
    for (size_t i = c.black.size(); i > 1; --i)
        std::swap(c.black[i - 1], c.black[rand_below(rng, i)]);
    return c;
}

}  // namespace testutil

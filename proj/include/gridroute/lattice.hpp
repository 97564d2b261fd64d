#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gridroute/geometry.hpp"

namespace gridroute {

// Finite set of lattice points; edges are implicit (unit Euclidean distance).
// Vertices are kept in canonical order and a dense grid gives O(1) lookup.
class LatticeGraph {
   public:
    LatticeGraph() = default;

    explicit LatticeGraph(std::vector<Cell> cells) : verts_(std::move(cells)) {
        std::sort(verts_.begin(), verts_.end(), CellCanonicalLess{});
        verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
        if (verts_.empty()) return;
        min_x_ = max_x_ = verts_[0].x;
        min_y_ = max_y_ = verts_[0].y;
        for (const Cell& c : verts_) {
            min_x_ = std::min(min_x_, c.x);
            max_x_ = std::max(max_x_, c.x);
            min_y_ = std::min(min_y_, c.y);
            max_y_ = std::max(max_y_, c.y);
        }
        stride_ = static_cast<size_t>(max_x_ - min_x_ + 1);
        grid_.assign(stride_ * static_cast<size_t>(max_y_ - min_y_ + 1), -1);
        for (size_t i = 0; i < verts_.size(); ++i) grid_[slot(verts_[i])] = static_cast<int32_t>(i);
    }

    size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    std::span<const Cell> vertices() const { return verts_; }
    const Cell& vertex(size_t i) const { return verts_[i]; }

    int32_t width() const { return empty() ? 0 : max_x_ - min_x_; }
    int32_t height() const { return empty() ? 0 : max_y_ - min_y_; }
    int32_t min_x() const { return min_x_; }
    int32_t max_x() const { return max_x_; }
    int32_t min_y() const { return min_y_; }
    int32_t max_y() const { return max_y_; }

    bool contains(const Cell& c) const { return index_of(c) >= 0; }

    // -1 when absent.
    int32_t index_of(const Cell& c) const {
        if (empty() || c.x < min_x_ || c.x > max_x_ || c.y < min_y_ || c.y > max_y_) return -1;
        return grid_[slot(c)];
    }

    int32_t index_of_checked(const Cell& c) const {
        int32_t i = index_of(c);
        if (i < 0)
            throw std::invalid_argument("vertex (" + std::to_string(c.x) + "," +
                                        std::to_string(c.y) + ") not in graph");
        return i;
    }

    template <typename F>
    void for_each_neighbor(const Cell& c, F&& f) const {
        static constexpr int dx[4] = {0, -1, 1, 0};
        static constexpr int dy[4] = {1, 0, 0, -1};
        for (int k = 0; k < 4; ++k) {
            Cell n{c.x + dx[k], c.y + dy[k]};
            if (contains(n)) f(n);
        }
    }

    size_t edge_count() const {
        size_t e = 0;
        for (const Cell& c : verts_) {
            if (contains(Cell{c.x + 1, c.y})) ++e;
            if (contains(Cell{c.x, c.y - 1})) ++e;
        }
        return e;
    }

   private:
    size_t slot(const Cell& c) const {
        return static_cast<size_t>(c.y - min_y_) * stride_ + static_cast<size_t>(c.x - min_x_);
    }

    std::vector<Cell> verts_;
    std::vector<int32_t> grid_;
    size_t stride_ = 0;
    int32_t min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
};

using GraphPtr = std::shared_ptr<const LatticeGraph>;

inline GraphPtr make_graph(std::vector<Cell> cells) {
    return std::make_shared<LatticeGraph>(std::move(cells));
}

// One of the 8 lattice symmetries plus an integer translation: p -> M p + t.
struct IsoTransform {
    int32_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    int32_t tx = 0, ty = 0;

    Cell apply(const Cell& c) const {
        return Cell{m00 * c.x + m01 * c.y + tx, m10 * c.x + m11 * c.y + ty};
    }
    Pt apply(const Pt& p) const {
        return Pt{Rat(m00) * p.x + Rat(m01) * p.y + Rat(tx),
                  Rat(m10) * p.x + Rat(m11) * p.y + Rat(ty)};
    }

    IsoTransform inverse() const {
        // M is orthogonal with integer entries, so M^-1 = M^T.
        IsoTransform r{m00, m10, m01, m11, 0, 0};
        r.tx = -(r.m00 * tx + r.m01 * ty);
        r.ty = -(r.m10 * tx + r.m11 * ty);
        return r;
    }

    // Returns "this, then next".
    IsoTransform then(const IsoTransform& n) const {
        IsoTransform r;
        r.m00 = n.m00 * m00 + n.m01 * m10;
        r.m01 = n.m00 * m01 + n.m01 * m11;
        r.m10 = n.m10 * m00 + n.m11 * m10;
        r.m11 = n.m10 * m01 + n.m11 * m11;
        r.tx = n.m00 * tx + n.m01 * ty + n.tx;
        r.ty = n.m10 * tx + n.m11 * ty + n.ty;
        return r;
    }

    static IsoTransform identity() { return {}; }
    static IsoTransform translation(int32_t dx, int32_t dy) { return {1, 0, 0, 1, dx, dy}; }
    static IsoTransform rot90() { return {0, -1, 1, 0, 0, 0}; }   // CCW
    static IsoTransform rot180() { return {-1, 0, 0, -1, 0, 0}; }
    static IsoTransform rot270() { return {0, 1, -1, 0, 0, 0}; }
    static IsoTransform reflect_x() { return {-1, 0, 0, 1, 0, 0}; }
    static IsoTransform reflect_y() { return {1, 0, 0, -1, 0, 0}; }
    static IsoTransform reflect_diag() { return {0, 1, 1, 0, 0, 0}; }
    static IsoTransform reflect_anti() { return {0, -1, -1, 0, 0, 0}; }
};

inline LatticeGraph transform_graph(const LatticeGraph& g, const IsoTransform& t) {
    std::vector<Cell> cells;
    cells.reserve(g.size());
    for (const Cell& c : g.vertices()) cells.push_back(t.apply(c));
    return LatticeGraph(std::move(cells));
}

// Injective vertex-to-vertex map between two lattice graphs.
struct VertexMap {
    std::unordered_map<Cell, Cell, CellHash> fwd;
    std::unordered_map<Cell, Cell, CellHash> inv;

    void insert(const Cell& a, const Cell& b) {
        if (!fwd.emplace(a, b).second || !inv.emplace(b, a).second)
            throw std::logic_error("vertex map not injective");
    }
    const Cell& apply(const Cell& a) const { return fwd.at(a); }
    const Cell& apply_inverse(const Cell& b) const { return inv.at(b); }
    bool maps(const Cell& a) const { return fwd.count(a) != 0; }
    size_t size() const { return fwd.size(); }
};

// ---------------------------------------------------------------------------
// Operations

inline LatticeGraph cut(const Polygon& poly) { return LatticeGraph(lattice_points(poly)); }

inline bool is_connected(const LatticeGraph& g) {
    if (g.size() <= 1) return true;
    std::vector<char> seen(g.size(), 0);
    std::vector<int32_t> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        int32_t i = stack.back();
        stack.pop_back();
        g.for_each_neighbor(g.vertex(i), [&](const Cell& n) {
            int32_t j = g.index_of(n);
            if (!seen[j]) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
        });
    }
    return reached == g.size();
}

// Debug dump: one line per row, top to bottom, '#' vertex / '.' hole,
// prefixed by the row's y coordinate.
inline std::string dump_graph(const LatticeGraph& g) {
    if (g.empty()) return "";
    std::string out;
    for (int32_t y = g.max_y(); y >= g.min_y(); --y) {
        out += std::to_string(y);
        out += ' ';
        for (int32_t x = g.min_x(); x <= g.max_x(); ++x)
            out += g.contains(Cell{x, y}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

namespace detail {

// Corners of all grid squares the open segment passes through, for the octant
// dx > 0, dy > 0 (after symmetry normalization). The caller filters for the
// graph side of the edge in original coordinates.
inline void boundary_corners_octant(const Cell& a, const Cell& b, std::vector<Cell>& out) {
    int64_t ax = a.x, ay = a.y, bx = b.x, by = b.y;
    int64_t dx = bx - ax, dy = by - ay;
    auto y_at = [&](int64_t x) { return Rat(ay) + Rat(dy * (x - ax), dx); };
    for (int64_t i = ax; i < bx; ++i) {
        Rat y_in = y_at(i), y_out = y_at(i + 1);
        int64_t r0 = to_i64(rat_floor(y_in));
        int64_t r1 = to_i64(rat_ceil(y_out)) - 1;
        for (int64_t r = r0; r <= r1; ++r)
            for (int corner = 0; corner < 4; ++corner)
                out.push_back(Cell{static_cast<int32_t>(i + (corner & 1)),
                                   static_cast<int32_t>(r + (corner >> 1))});
    }
}

inline void segment_lattice_cells(const Cell& a, const Cell& b, std::vector<Cell>& out) {
    int32_t dx = b.x - a.x, dy = b.y - a.y;
    int32_t steps = std::max(std::abs(dx), std::abs(dy));
    if (steps == 0) {
        out.push_back(a);
        return;
    }
    int32_t g = std::gcd(std::abs(dx), std::abs(dy));
    int32_t sx = dx / g, sy = dy / g;
    for (int32_t k = 0; k <= g; ++k) out.push_back(Cell{a.x + k * sx, a.y + k * sy});
}

}  // namespace detail

// Boundary circuit of K: each hull edge is replaced by the K-side half of the
// boundary of the union of grid squares the edge passes through. Requires
// K = cut(P) connected with P the hull of K's vertices.
inline std::vector<Cell> skin(const LatticeGraph& k, const Polygon& p) {
    if (!is_connected(k)) throw std::invalid_argument("skin requires a connected graph");
    if (k.empty()) return {};
    std::vector<Cell> out;
    const size_t n = p.vertices.size();
    if (n <= 2) {
        // Degenerate hull: K is a point or a collinear path; the circuit is K itself.
        out.assign(k.vertices().begin(), k.vertices().end());
        return out;
    }
    for (size_t e = 0; e < n; ++e) {
        const Pt& pa = p.vertices[e];
        const Pt& pb = p.vertices[(e + 1) % n];
        if (!is_integer(pa.x) || !is_integer(pa.y) || !is_integer(pb.x) || !is_integer(pb.y))
            throw std::invalid_argument("skin requires a lattice-vertex hull");
        Cell a{static_cast<int32_t>(to_i64(rat_num(pa.x))), static_cast<int32_t>(to_i64(rat_num(pa.y)))};
        Cell b{static_cast<int32_t>(to_i64(rat_num(pb.x))), static_cast<int32_t>(to_i64(rat_num(pb.y)))};
        if (a.x == b.x || a.y == b.y) {
            detail::segment_lattice_cells(a, b, out);
            continue;
        }
        // Normalize the edge into the dx > 0, dy > 0 octant, gather the
        // crossed-square corners, then keep the corners weakly on the graph
        // side (left of a->b in original coordinates).
        IsoTransform t = IsoTransform::identity();
        if (b.x - a.x < 0) t = t.then(IsoTransform::reflect_x());
        if (t.apply(b).y - t.apply(a).y < 0) t = t.then(IsoTransform::reflect_y());
        IsoTransform back = t.inverse();
        std::vector<Cell> corners;
        detail::boundary_corners_octant(t.apply(a), t.apply(b), corners);
        int64_t dx = b.x - a.x, dy = b.y - a.y;
        for (const Cell& tc : corners) {
            Cell c = back.apply(tc);
            if (dx * static_cast<int64_t>(c.y - a.y) - dy * static_cast<int64_t>(c.x - a.x) >= 0)
                out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), CellCanonicalLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const Cell& c : out)
        if (!k.contains(c)) throw std::logic_error("skin circuit left the graph");
    return out;
}

// Iteratively removes extreme rows/columns holding <= 4 lattice points
// (sweep order: top, bottom, left, right). Returns (core, removed).
inline std::pair<std::vector<Cell>, std::vector<Cell>> trim_margins(const LatticeGraph& g) {
    int64_t wh = static_cast<int64_t>(g.width()) + g.height();
    if (static_cast<int64_t>(g.size()) <= 4 * wh)
        throw std::invalid_argument("trim_margins requires more than 4(w+h) vertices");

    // Row/column extents; rows and columns of a convex cut are intervals.
    std::unordered_map<int32_t, std::pair<int32_t, int32_t>> row, col;
    for (const Cell& c : g.vertices()) {
        auto [it, fresh] = row.emplace(c.y, std::make_pair(c.x, c.x));
        if (!fresh) {
            it->second.first = std::min(it->second.first, c.x);
            it->second.second = std::max(it->second.second, c.x);
        }
        auto [jt, fresh2] = col.emplace(c.x, std::make_pair(c.y, c.y));
        if (!fresh2) {
            jt->second.first = std::min(jt->second.first, c.y);
            jt->second.second = std::max(jt->second.second, c.y);
        }
    }
    int32_t x0 = g.min_x(), x1 = g.max_x(), y0 = g.min_y(), y1 = g.max_y();
    auto row_count = [&](int32_t y) -> int64_t {
        auto it = row.find(y);
        if (it == row.end()) return 0;
        int32_t lo = std::max(it->second.first, x0), hi = std::min(it->second.second, x1);
        return hi >= lo ? hi - lo + 1 : 0;
    };
    auto col_count = [&](int32_t x) -> int64_t {
        auto it = col.find(x);
        if (it == col.end()) return 0;
        int32_t lo = std::max(it->second.first, y0), hi = std::min(it->second.second, y1);
        return hi >= lo ? hi - lo + 1 : 0;
    };
    bool changed = true;
    while (changed && x0 <= x1 && y0 <= y1) {
        changed = false;
        if (y0 <= y1 && row_count(y1) <= 4) { --y1; changed = true; }
        if (y0 <= y1 && row_count(y0) <= 4) { ++y0; changed = true; }
        if (x0 <= x1 && col_count(x0) <= 4) { ++x0; changed = true; }
        if (x0 <= x1 && col_count(x1) <= 4) { --x1; changed = true; }
    }
    if (x0 > x1 || y0 > y1) throw std::logic_error("trim_margins emptied the graph");
    std::vector<Cell> core, removed;
    for (const Cell& c : g.vertices()) {
        if (c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1)
            core.push_back(c);
        else
            removed.push_back(c);
    }
    if (static_cast<int64_t>(removed.size()) > 4 * wh)
        throw std::logic_error("trim_margins removed more than 4(w+h) vertices");
    return {std::move(core), std::move(removed)};
}

// Removes the rightmost vertex of every row.
inline LatticeGraph drop_rightmost(const LatticeGraph& g) {
    std::unordered_map<int32_t, int32_t> row_max;
    for (const Cell& c : g.vertices()) {
        auto [it, fresh] = row_max.emplace(c.y, c.x);
        if (!fresh) it->second = std::max(it->second, c.x);
    }
    std::vector<Cell> cells;
    cells.reserve(g.size());
    for (const Cell& c : g.vertices())
        if (c.x != row_max[c.y]) cells.push_back(c);
    return LatticeGraph(std::move(cells));
}

// Row decomposition: y -> sorted x list, rows listed top to bottom.
inline std::vector<std::pair<int32_t, std::vector<int32_t>>> row_decomposition(
    const LatticeGraph& g) {
    std::vector<std::pair<int32_t, std::vector<int32_t>>> rows;
    for (const Cell& c : g.vertices()) {
        if (rows.empty() || rows.back().first != c.y) rows.push_back({c.y, {}});
        rows.back().second.push_back(c.x);  // canonical order: x ascending
    }
    return rows;
}

// The map sending the j-th vertex of row i of `from` to the j-th vertex of
// row i of `into`. Both graphs must occupy the same row set and each `from`
// row must fit inside the matching `into` row.
inline VertexMap psi(const LatticeGraph& from, const LatticeGraph& into) {
    auto rf = row_decomposition(from);
    auto ri = row_decomposition(into);
    if (rf.size() != ri.size()) throw std::invalid_argument("psi: row sets differ");
    VertexMap map;
    for (size_t r = 0; r < rf.size(); ++r) {
        if (rf[r].first != ri[r].first) throw std::invalid_argument("psi: row sets differ");
        if (rf[r].second.size() > ri[r].second.size())
            throw std::invalid_argument("psi: source row " + std::to_string(rf[r].first) +
                                        " exceeds target row");
        for (size_t j = 0; j < rf[r].second.size(); ++j)
            map.insert(Cell{rf[r].second[j], rf[r].first}, Cell{ri[r].second[j], ri[r].first});
    }
    return map;
}

}  // namespace gridroute

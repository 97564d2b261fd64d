#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gridroute/lattice.hpp"

namespace gridroute {

// Validated ramp-like graph: rows contiguous from x=0, columns contiguous
// from y=0, discretely convex border. row_end[i] is the greatest x in row i
// (rows numbered bottom to top by y).
struct RampGraph {
    GraphPtr base;
    std::vector<int32_t> row_end;  // n_i
    std::vector<int32_t> col_end;  // greatest y in column x
    int32_t rows = 0;              // m
    int32_t cols = 0;              // n

    int64_t row_size(int32_t i) const { return row_end[i] + 1; }
    int64_t col_size(int32_t x) const { return col_end[x] + 1; }
};

struct RampViolation {
    int property = 0;          // 1, 2 or 3
    Cell missing{0, 0};        // witness vertex for properties 1/2
    int32_t i = -1, j = -1, c = -1;  // witness triple for property 3
    std::string message;
};

using RampCheck = std::variant<RampGraph, RampViolation>;

namespace detail {

// Exhaustive scan of the discretely convex border condition; the test oracle.
inline std::optional<std::array<int32_t, 3>> border_witness_cubic(
    const std::vector<int32_t>& n) {
    const int32_t m = static_cast<int32_t>(n.size());
    for (int32_t c = 1; c < m; ++c)
        for (int32_t j = c; j < m; ++j)
            for (int32_t i = j + 1; i < m; ++i)
                if (n[i - c] - n[i] < n[j - c] - n[j] - 1) return std::array<int32_t, 3>{i, j, c};
    return std::nullopt;
}

// Equivalent sliding form: for each c, the difference sequence
// d_c(i) = n[i-c] - n[i] may fall below an earlier value by at most 1.
inline std::optional<std::array<int32_t, 3>> border_witness_sliding(
    const std::vector<int32_t>& n) {
    const int32_t m = static_cast<int32_t>(n.size());
    for (int32_t c = 1; c < m; ++c) {
        int32_t best = n[0] - n[c];
        int32_t best_j = c;
        for (int32_t i = c + 1; i < m; ++i) {
            int32_t d = n[i - c] - n[i];
            if (d < best - 1) return std::array<int32_t, 3>{i, best_j, c};
            if (d > best) {
                best = d;
                best_j = i;
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Validates the three ramp-like properties after translating the minimum
// coordinates to 0. A Violation is an ordinary return value.
inline RampCheck check_ramp(const LatticeGraph& g) {
    if (g.empty()) {
        return RampGraph{make_graph({}), {}, {}, 0, 0};
    }
    GraphPtr base = std::make_shared<LatticeGraph>(
        transform_graph(g, IsoTransform::translation(-g.min_x(), -g.min_y())));
    const int32_t m = base->height() + 1;
    const int32_t n = base->width() + 1;

    std::vector<int32_t> row_end(m, -1), row_cnt(m, 0);
    std::vector<int32_t> col_end(n, -1), col_cnt(n, 0);
    for (const Cell& cell : base->vertices()) {
        row_end[cell.y] = std::max(row_end[cell.y], cell.x);
        ++row_cnt[cell.y];
        col_end[cell.x] = std::max(col_end[cell.x], cell.y);
        ++col_cnt[cell.x];
    }
    for (int32_t y = 0; y < m; ++y) {
        if (row_cnt[y] != row_end[y] + 1) {
            for (int32_t x = 0; x <= row_end[y]; ++x)
                if (!base->contains(Cell{x, y}))
                    return RampViolation{1, Cell{x, y}, -1, -1, -1,
                                         "row not contiguous from x=0"};
        }
    }
    for (int32_t x = 0; x < n; ++x) {
        if (col_cnt[x] != col_end[x] + 1) {
            for (int32_t y = 0; y <= col_end[x]; ++y)
                if (!base->contains(Cell{x, y}))
                    return RampViolation{2, Cell{x, y}, -1, -1, -1,
                                         "column not contiguous from y=0"};
        }
    }
    // The sliding form is the production path; the cubic scan doubles as a
    // cross-check for small instances and as the test oracle.
    auto witness = (m <= 64) ? detail::border_witness_cubic(row_end)
                             : detail::border_witness_sliding(row_end);
    if (witness) {
        auto [i, j, c] = *witness;
        return RampViolation{3, Cell{0, 0}, i, j, c, "border not discretely convex"};
    }
    return RampGraph{std::move(base), std::move(row_end), std::move(col_end), m, n};
}

inline bool is_ramp(const LatticeGraph& g) {
    return std::holds_alternative<RampGraph>(check_ramp(g));
}

// Tries the 8 lattice symmetries (identity, rot90, rot180, rot270, then the
// reflections across the x axis, y axis, diagonal and antidiagonal), each
// composed with the translation to the origin.
inline std::variant<std::pair<RampGraph, IsoTransform>, RampViolation> canonicalize_ramp(
    const LatticeGraph& g) {
    const std::array<IsoTransform, 8> syms = {
        IsoTransform::identity(),  IsoTransform::rot90(),        IsoTransform::rot180(),
        IsoTransform::rot270(),    IsoTransform::reflect_x(),    IsoTransform::reflect_y(),
        IsoTransform::reflect_diag(), IsoTransform::reflect_anti()};
    std::optional<RampViolation> first_violation;
    for (const IsoTransform& s : syms) {
        LatticeGraph rotated = transform_graph(g, s);
        IsoTransform full =
            s.then(IsoTransform::translation(-rotated.min_x(), -rotated.min_y()));
        RampCheck check = check_ramp(rotated);
        if (auto* ramp = std::get_if<RampGraph>(&check))
            return std::make_pair(std::move(*ramp), full);
        if (!first_violation) first_violation = std::get<RampViolation>(check);
    }
    return *first_violation;
}

// Quadrant split at x = ceil(n/2) - 1/2 and y = ceil(m/2) - 1/2, in base
// coordinates: [lower-left, lower-right, upper-left, upper-right]. Every
// nonempty piece is ramp-validated after translation; a failure here is an
// internal invariant breach, not an input error.
inline std::array<std::vector<Cell>, 4> quadrants(const RampGraph& r) {
    const int32_t cx = (r.cols + 1) / 2 - 1;  // columns <= cx go left
    const int32_t cy = (r.rows + 1) / 2 - 1;  // rows <= cy go down
    std::array<std::vector<Cell>, 4> pieces;
    for (const Cell& c : r.base->vertices()) {
        int idx = (c.x <= cx ? 0 : 1) + (c.y <= cy ? 0 : 2);
        pieces[idx].push_back(c);
    }
    for (const auto& piece : pieces) {
        if (piece.empty()) continue;
        LatticeGraph pg{std::vector<Cell>(piece)};
        if ((pg.width() + 1) > (r.cols + 1) / 2 || (pg.height() + 1) > (r.rows + 1) / 2)
            throw std::logic_error("quadrant exceeds half extent");
        RampCheck check = check_ramp(pg);
        if (auto* v = std::get_if<RampViolation>(&check))
            throw std::logic_error("quadrant failed ramp validation: " + v->message +
                                   " (property " + std::to_string(v->property) + ")");
    }
    return pieces;
}

}  // namespace gridroute

#pragma once

#include <cstdint>
#include <functional>

namespace gridroute {

// A lattice point. Canonical order is rows top to bottom, then left to right;
// that order defines token numbering and every deterministic tie-break.
struct Cell {
    int32_t x = 0;
    int32_t y = 0;

    bool operator==(const Cell& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Cell& o) const { return !(*this == o); }
};

inline bool canonical_less(const Cell& a, const Cell& b) {
    if (a.y != b.y) return a.y > b.y;
    return a.x < b.x;
}

struct CellCanonicalLess {
    bool operator()(const Cell& a, const Cell& b) const { return canonical_less(a, b); }
};

inline uint64_t cell_key(const Cell& c) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(c.x)) << 32) |
           static_cast<uint64_t>(static_cast<uint32_t>(c.y));
}

struct CellHash {
    size_t operator()(const Cell& c) const { return std::hash<uint64_t>()(cell_key(c)); }
};

}  // namespace gridroute

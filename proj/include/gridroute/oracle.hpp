#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gridroute/schedule.hpp"

namespace gridroute {

namespace detail {

// All matchings of the graph as vertex-index pair lists, canonical edge
// order, enumerated by recursive inclusion/exclusion. The empty matching is
// excluded: distance counts steps taken.
inline std::vector<std::vector<std::pair<int32_t, int32_t>>> all_matchings(
    const LatticeGraph& g) {
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (size_t i = 0; i < g.size(); ++i) {
        const Cell c = g.vertex(i);
        for (const Cell n : {Cell{c.x + 1, c.y}, Cell{c.x, c.y - 1}}) {
            int32_t j = g.index_of(n);
            if (j >= 0) edges.push_back({static_cast<int32_t>(i), j});
        }
    }
    std::vector<std::vector<std::pair<int32_t, int32_t>>> out;
    std::vector<std::pair<int32_t, int32_t>> cur;
    std::vector<char> used(g.size(), 0);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == edges.size()) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        rec(idx + 1);
        auto [a, b] = edges[idx];
        if (!used[a] && !used[b]) {
            used[a] = used[b] = 1;
            cur.push_back(edges[idx]);
            rec(idx + 1);
            cur.pop_back();
            used[a] = used[b] = 0;
        }
    };
    rec(0);
    return out;
}

inline uint64_t encode_labeled(const std::vector<int32_t>& tokens) {
    uint64_t key = 0;
    for (int32_t t : tokens) key = key * 16 + static_cast<uint64_t>(t);
    return key;
}

inline uint32_t encode_colored(const std::vector<uint8_t>& black) {
    uint32_t key = 0;
    for (size_t i = 0; i < black.size(); ++i)
        if (black[i]) key |= (1u << i);
    return key;
}

}  // namespace detail

// Exact labeled routing distance by BFS over configurations (|V| <= 8).
inline int64_t exact_distance(const LabeledConfig& from, const LabeledConfig& to) {
    const LatticeGraph& g = *from.graph;
    if (g.size() > 8) throw std::invalid_argument("labeled oracle guard: more than 8 vertices");
    if (!is_connected(g)) throw std::invalid_argument("oracle requires a connected graph");
    if (from.tokens == to.tokens) return 0;
    auto matchings = detail::all_matchings(g);
    std::unordered_map<uint64_t, int32_t> dist;
    std::deque<std::vector<int32_t>> queue;
    dist[detail::encode_labeled(from.tokens)] = 0;
    queue.push_back(from.tokens);
    const uint64_t want = detail::encode_labeled(to.tokens);
    while (!queue.empty()) {
        std::vector<int32_t> cur = std::move(queue.front());
        queue.pop_front();
        int32_t d = dist[detail::encode_labeled(cur)];
        for (const auto& m : matchings) {
            std::vector<int32_t> nxt = cur;
            for (auto [a, b] : m) std::swap(nxt[a], nxt[b]);
            uint64_t key = detail::encode_labeled(nxt);
            if (dist.emplace(key, d + 1).second) {
                if (key == want) return d + 1;
                queue.push_back(std::move(nxt));
            }
        }
    }
    throw std::logic_error("labeled configuration space is not connected");
}

// Exact labeled routing number: eccentricity of the identity configuration
// (steps are involutions, so fixing the source loses no generality). |V| <= 7.
inline int64_t exact_rt(GraphPtr g) {
    if (g->size() > 7) throw std::invalid_argument("rt oracle guard: more than 7 vertices");
    if (!is_connected(*g)) throw std::invalid_argument("oracle requires a connected graph");
    if (g->size() <= 1) return 0;
    auto matchings = detail::all_matchings(*g);
    LabeledConfig id = identity_config(g);
    std::unordered_map<uint64_t, int32_t> dist;
    std::deque<std::vector<int32_t>> queue;
    dist[detail::encode_labeled(id.tokens)] = 0;
    queue.push_back(id.tokens);
    int64_t ecc = 0;
    while (!queue.empty()) {
        std::vector<int32_t> cur = std::move(queue.front());
        queue.pop_front();
        int32_t d = dist[detail::encode_labeled(cur)];
        ecc = std::max<int64_t>(ecc, d);
        for (const auto& m : matchings) {
            std::vector<int32_t> nxt = cur;
            for (auto [a, b] : m) std::swap(nxt[a], nxt[b]);
            uint64_t key = detail::encode_labeled(nxt);
            if (dist.emplace(key, d + 1).second) queue.push_back(std::move(nxt));
        }
    }
    return ecc;
}

namespace detail {

// Colored successor masks, deduplicated.
inline std::vector<uint32_t> colored_neighbors(
    uint32_t mask, const std::vector<std::vector<std::pair<int32_t, int32_t>>>& matchings) {
    std::vector<uint32_t> out;
    for (const auto& m : matchings) {
        uint32_t nxt = mask;
        for (auto [a, b] : m) {
            bool ba = (nxt >> a) & 1u, bb = (nxt >> b) & 1u;
            if (ba != bb) nxt ^= (1u << a) | (1u << b);
        }
        if (nxt != mask) out.push_back(nxt);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// Exact colored routing distance by BFS over color masks (|V| <= 16).
inline int64_t exact_distance(const ColorConfig& from, const ColorConfig& to) {
    const LatticeGraph& g = *from.graph;
    if (g.size() > 16) throw std::invalid_argument("colored oracle guard: more than 16 vertices");
    if (!is_connected(g)) throw std::invalid_argument("oracle requires a connected graph");
    if (from.black_count() != to.black_count())
        throw std::invalid_argument("colored oracle: black counts differ");
    uint32_t start = detail::encode_colored(from.black);
    uint32_t want = detail::encode_colored(to.black);
    if (start == want) return 0;
    auto matchings = detail::all_matchings(g);
    std::unordered_map<uint32_t, int32_t> dist;
    std::deque<uint32_t> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
        uint32_t cur = queue.front();
        queue.pop_front();
        int32_t d = dist[cur];
        for (uint32_t nxt : detail::colored_neighbors(cur, matchings)) {
            if (dist.emplace(nxt, d + 1).second) {
                if (nxt == want) return d + 1;
                queue.push_back(nxt);
            }
        }
    }
    throw std::logic_error("colored configuration space is not connected");
}

// Exact unlabeled routing number: max over k and over pairs of k-black
// arrangements of the exact colored distance. |V| <= 16.
inline int64_t exact_urt(GraphPtr g) {
    const size_t n = g->size();
    if (n > 16) throw std::invalid_argument("urt oracle guard: more than 16 vertices");
    if (!is_connected(*g)) throw std::invalid_argument("oracle requires a connected graph");
    if (n <= 1) return 0;
    auto matchings = detail::all_matchings(*g);
    int64_t best = 0;
    for (size_t k = 1; 2 * k <= n; ++k) {
        // Layer of all masks with popcount k; diameter by BFS from each mask.
        std::vector<uint32_t> layer;
        for (uint32_t mask = 0; mask < (1u << n); ++mask)
            if (static_cast<size_t>(__builtin_popcount(mask)) == k) layer.push_back(mask);
        std::unordered_map<uint32_t, std::vector<uint32_t>> adj;
        adj.reserve(layer.size() * 2);
        for (uint32_t mask : layer) adj[mask] = detail::colored_neighbors(mask, matchings);
        for (uint32_t src : layer) {
            std::unordered_map<uint32_t, int32_t> dist;
            std::deque<uint32_t> queue{src};
            dist[src] = 0;
            while (!queue.empty()) {
                uint32_t cur = queue.front();
                queue.pop_front();
                int32_t d = dist[cur];
                best = std::max<int64_t>(best, d);
                for (uint32_t nxt : adj[cur])
                    if (dist.emplace(nxt, d + 1).second) queue.push_back(nxt);
            }
            if (dist.size() != layer.size())
                throw std::logic_error("colored layer is not connected");
        }
    }
    return best;
}

inline int64_t lattice_diameter(const LatticeGraph& g) {
    int64_t diam = 0;
    for (size_t s = 0; s < g.size(); ++s) {
        std::vector<int32_t> dist(g.size(), -1);
        std::deque<int32_t> queue{static_cast<int32_t>(s)};
        dist[s] = 0;
        while (!queue.empty()) {
            int32_t v = queue.front();
            queue.pop_front();
            diam = std::max<int64_t>(diam, dist[v]);
            g.for_each_neighbor(g.vertex(v), [&](const Cell& nc) {
                int32_t u = g.index_of(nc);
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            });
        }
    }
    return diam;
}

}  // namespace gridroute

#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gridroute/schedule.hpp"

namespace gridroute {

// ---------------------------------------------------------------------------
// Odd-even transposition on an explicit path sequence.

// Sorts the tokens sitting on seq into ascending rank order; rank[k] is the
// sort key of the token currently on seq[k]. At most seq.size() steps.
inline std::vector<Step> odd_even_steps(std::span<const Cell> seq, std::vector<int64_t> rank) {
    const size_t n = seq.size();
    std::vector<Step> steps;
    if (n <= 1) return steps;
    size_t phase = 0;
    while (!std::is_sorted(rank.begin(), rank.end())) {
        if (phase >= n) throw std::logic_error("odd-even transposition exceeded n phases");
        Step st;
        for (size_t k = phase % 2; k + 1 < n; k += 2) {
            if (rank[k] > rank[k + 1]) {
                std::swap(rank[k], rank[k + 1]);
                st.push_back(make_swap(seq[k], seq[k + 1]));
            }
        }
        ++phase;
        if (!st.empty()) {
            sort_step(st);
            steps.push_back(std::move(st));
        }
    }
    return steps;
}

// Colored variant: stable completion keyed by the target pattern (the r-th
// black of cur goes to the r-th black slot of want), then odd-even sort.
inline std::vector<Step> colored_sequence_steps(std::span<const Cell> seq,
                                                const std::vector<uint8_t>& cur,
                                                const std::vector<uint8_t>& want) {
    if (cur.size() != seq.size() || want.size() != seq.size())
        throw std::invalid_argument("colored sequence size mismatch");
    std::vector<int64_t> black_slots, white_slots;
    for (size_t k = 0; k < want.size(); ++k)
        (want[k] ? black_slots : white_slots).push_back(static_cast<int64_t>(k));
    std::vector<int64_t> rank(seq.size());
    size_t nb = 0, nw = 0;
    for (size_t k = 0; k < cur.size(); ++k) {
        if (cur[k]) {
            if (nb >= black_slots.size())
                throw std::invalid_argument("colored sequence black counts mismatch");
            rank[k] = black_slots[nb++];
        } else {
            if (nw >= white_slots.size())
                throw std::invalid_argument("colored sequence black counts mismatch");
            rank[k] = white_slots[nw++];
        }
    }
    return odd_even_steps(seq, std::move(rank));
}

// Orders the vertices of a path graph (every degree <= 2, connected) from the
// canonically smaller endpoint.
inline std::optional<std::vector<Cell>> path_sequence(const LatticeGraph& g) {
    if (g.size() <= 1) {
        return std::vector<Cell>(g.vertices().begin(), g.vertices().end());
    }
    std::optional<Cell> start;
    for (const Cell& c : g.vertices()) {
        int deg = 0;
        g.for_each_neighbor(c, [&](const Cell&) { ++deg; });
        if (deg > 2) return std::nullopt;
        if (deg == 1 && !start) start = c;  // canonical order scan: first endpoint
    }
    if (!start) return std::nullopt;  // cycle or disconnected clumps
    std::vector<Cell> seq{*start};
    Cell prev = *start, cur = *start;
    while (seq.size() < g.size()) {
        std::optional<Cell> next;
        g.for_each_neighbor(cur, [&](const Cell& n) {
            if (n != prev && !next) next = n;
        });
        if (!next) return std::nullopt;
        seq.push_back(*next);
        prev = cur;
        cur = *next;
    }
    return seq;
}

// Odd-even transposition routing on a path graph; length <= n exactly.
inline Schedule route_path(const LabeledConfig& from, const LabeledConfig& to) {
    GraphPtr g = from.graph;
    auto seq = path_sequence(*g);
    if (!seq) throw std::invalid_argument("route_path requires a path graph");
    const size_t n = seq->size();
    std::vector<int64_t> pos_in_target(n + 1);
    for (size_t k = 0; k < n; ++k)
        pos_in_target[to.tokens[g->index_of_checked((*seq)[k])]] = static_cast<int64_t>(k);
    std::vector<int64_t> rank(n);
    for (size_t k = 0; k < n; ++k)
        rank[k] = pos_in_target[from.tokens[g->index_of_checked((*seq)[k])]];
    Schedule s = make_schedule(g, static_cast<int64_t>(n));
    s.steps = odd_even_steps(*seq, std::move(rank));
    return s;
}

inline Schedule route_path(const ColorConfig& from, const ColorConfig& to) {
    GraphPtr g = from.graph;
    auto seq = path_sequence(*g);
    if (!seq) throw std::invalid_argument("route_path requires a path graph");
    if (from.black_count() != to.black_count())
        throw std::invalid_argument("route_path: black counts differ");
    std::vector<uint8_t> cur(seq->size()), want(seq->size());
    for (size_t k = 0; k < seq->size(); ++k) {
        cur[k] = from.black[g->index_of_checked((*seq)[k])];
        want[k] = to.black[g->index_of_checked((*seq)[k])];
    }
    Schedule s = make_schedule(g, static_cast<int64_t>(seq->size()));
    s.steps = colored_sequence_steps(*seq, cur, want);
    return s;
}

// ---------------------------------------------------------------------------
// Tree routing: spanning tree + recursive centroid split. The hub exchange
// around the centroid pairs every delivery into a component with an
// extraction out of it, so component populations stay balanced.

namespace detail {

class TreeRouter {
   public:
    TreeRouter(const LatticeGraph& g, const std::vector<int32_t>& from_tokens,
               const std::vector<int32_t>& to_tokens)
        : g_(g), cur_(from_tokens), tgt_(to_tokens) {
        const size_t n = g.size();
        adj_.assign(n, {});
        std::vector<char> seen(n, 0);
        std::deque<int32_t> queue{0};
        seen[0] = 1;
        size_t reached = 1;
        while (!queue.empty()) {
            int32_t v = queue.front();
            queue.pop_front();
            g.for_each_neighbor(g.vertex(v), [&](const Cell& nc) {
                int32_t u = g.index_of(nc);
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    adj_[v].push_back(u);
                    adj_[u].push_back(v);
                    queue.push_back(u);
                }
            });
        }
        if (reached != n) throw std::invalid_argument("route_tree requires a connected graph");
        token_home_.assign(n + 1, -1);
        for (size_t i = 0; i < n; ++i) token_home_[tgt_[i]] = static_cast<int32_t>(i);
    }

    std::vector<Step> run() {
        std::vector<int32_t> all(g_.size());
        std::iota(all.begin(), all.end(), 0);
        return solve(all);
    }

   private:
    // Tree-degree-based path detection within a vertex subset.
    std::optional<std::vector<int32_t>> subset_path(const std::vector<int32_t>& verts,
                                                    const std::vector<char>& inside) {
        int32_t start = -1;
        for (int32_t v : verts) {
            int deg = 0;
            for (int32_t u : adj_[v])
                if (inside[u]) ++deg;
            if (deg > 2) return std::nullopt;
            if (deg <= 1 && start < 0) start = v;
        }
        if (start < 0) return std::nullopt;
        std::vector<int32_t> seq{start};
        int32_t prev = -1, cur = start;
        while (seq.size() < verts.size()) {
            int32_t next = -1;
            for (int32_t u : adj_[cur])
                if (inside[u] && u != prev && next < 0) next = u;
            if (next < 0) return std::nullopt;
            seq.push_back(next);
            prev = cur;
            cur = next;
        }
        return seq;
    }

    std::vector<Step> route_subset_path(const std::vector<int32_t>& seq) {
        std::vector<Cell> cells(seq.size());
        std::vector<int64_t> rank(seq.size());
        std::vector<int64_t> pos(g_.size() + 1);
        for (size_t k = 0; k < seq.size(); ++k) pos[tgt_[seq[k]]] = static_cast<int64_t>(k);
        for (size_t k = 0; k < seq.size(); ++k) {
            cells[k] = g_.vertex(seq[k]);
            rank[k] = pos[cur_[seq[k]]];
        }
        std::vector<Step> steps = odd_even_steps(cells, rank);
        replay(steps);
        return steps;
    }

    void replay(const std::vector<Step>& steps) {
        for (const Step& st : steps)
            for (const Swap& sw : st)
                std::swap(cur_[g_.index_of_checked(sw.a)], cur_[g_.index_of_checked(sw.b)]);
    }

    std::vector<Step> solve(const std::vector<int32_t>& verts) {
        if (verts.size() <= 1) return {};
        bool done = true;
        for (int32_t v : verts)
            if (cur_[v] != tgt_[v]) done = false;
        if (done) return {};

        std::vector<char> inside(g_.size(), 0);
        for (int32_t v : verts) inside[v] = 1;
        if (auto seq = subset_path(verts, inside)) return route_subset_path(*seq);

        // Centroid: minimizes the largest component of the subset tree.
        int32_t centroid = find_centroid(verts, inside);

        // Components of T - centroid, each rooted at a centroid neighbor,
        // listed in canonical order of the root.
        std::vector<int32_t> comp_of(g_.size(), -1);
        std::vector<std::vector<int32_t>> comps;   // BFS order, root first
        std::vector<int32_t> roots;
        for (int32_t r : adj_[centroid]) {
            if (!inside[r]) continue;
            int32_t id = static_cast<int32_t>(comps.size());
            comps.push_back({});
            roots.push_back(r);
            std::deque<int32_t> queue{r};
            comp_of[r] = id;
            while (!queue.empty()) {
                int32_t v = queue.front();
                queue.pop_front();
                comps[id].push_back(v);
                for (int32_t u : adj_[v])
                    if (inside[u] && u != centroid && comp_of[u] < 0) {
                        comp_of[u] = id;
                        queue.push_back(u);
                    }
            }
        }
        // Rootward parents within each component (BFS order from the root).
        std::vector<int32_t> parent(g_.size(), -1);
        for (size_t id = 0; id < comps.size(); ++id) {
            std::deque<int32_t> queue{roots[id]};
            std::vector<char> seen(g_.size(), 0);
            seen[roots[id]] = 1;
            while (!queue.empty()) {
                int32_t v = queue.front();
                queue.pop_front();
                for (int32_t u : adj_[v])
                    if (inside[u] && u != centroid && comp_of[u] == static_cast<int32_t>(id) &&
                        !seen[u]) {
                        seen[u] = 1;
                        parent[u] = v;
                        queue.push_back(u);
                    }
            }
        }

        const int32_t kCenter = static_cast<int32_t>(comps.size());
        auto home_of = [&](int32_t token) {
            int32_t home_vertex = token_home_[token];
            if (home_vertex == centroid) return kCenter;
            int32_t id = comp_of[home_vertex];
            if (id < 0) throw std::logic_error("token homed outside the subtree being routed");
            return id;
        };

        // Tokens inside each component homed elsewhere; hub swaps keep the
        // in/out balance, so the conveyor never wedges.
        std::vector<int64_t> out_cnt(comps.size(), 0);
        int64_t out_total = 0;
        for (size_t id = 0; id < comps.size(); ++id)
            for (int32_t v : comps[id])
                if (home_of(cur_[v]) != static_cast<int32_t>(id)) {
                    ++out_cnt[id];
                    ++out_total;
                }

        // Phase A: hub conveyor until every token sits in its home component.
        std::vector<Step> steps;
        std::vector<uint32_t> used(g_.size(), 0);
        uint32_t tick = 0;
        const size_t step_cap = 10 * verts.size() + 16;
        while (out_total > 0) {
            if (steps.size() > step_cap) throw std::logic_error("tree conveyor failed to drain");
            ++tick;
            Step st;
            auto do_swap = [&](int32_t a, int32_t b) {
                used[a] = used[b] = tick;
                st.push_back(make_swap(g_.vertex(a), g_.vertex(b)));
                std::swap(cur_[a], cur_[b]);
            };
            auto hub_swap = [&](int32_t id) {
                int32_t r = roots[id];
                // Token leaving the component:
                if (home_of(cur_[r]) != id) { --out_cnt[id]; --out_total; }
                // Token entering it:
                if (home_of(cur_[centroid]) != id) { ++out_cnt[id]; ++out_total; }
                do_swap(centroid, r);
            };
            // Hub rule.
            int32_t hub_token_home = home_of(cur_[centroid]);
            if (hub_token_home != kCenter) {
                int32_t r = roots[hub_token_home];
                if (home_of(cur_[r]) != hub_token_home) hub_swap(hub_token_home);
            } else {
                int32_t best = -1;
                int64_t best_out = 0;
                for (size_t id = 0; id < comps.size(); ++id) {
                    int32_t r = roots[id];
                    if (home_of(cur_[r]) == static_cast<int32_t>(id)) continue;
                    if (out_cnt[id] > best_out) {
                        best_out = out_cnt[id];
                        best = static_cast<int32_t>(id);
                    }
                }
                if (best >= 0) hub_swap(best);
            }
            // Percolation: out-of-component tokens move toward the root when
            // the parent holds a token that is not itself trying to leave.
            // Tokens homed in another component take priority over the
            // displaced center token.
            for (int pass = 0; pass < 2; ++pass) {
                for (size_t id = 0; id < comps.size(); ++id) {
                    for (int32_t v : comps[id]) {
                        if (v == roots[id]) continue;
                        int32_t p = parent[v];
                        if (used[v] == tick || used[p] == tick) continue;
                        int32_t hv = home_of(cur_[v]);
                        if (hv == static_cast<int32_t>(id)) continue;
                        bool priority = (hv != kCenter);
                        if ((pass == 0) != priority) continue;
                        if (home_of(cur_[p]) != static_cast<int32_t>(id)) continue;
                        do_swap(p, v);
                    }
                }
            }
            if (st.empty()) throw std::logic_error("tree conveyor stalled");
            sort_step(st);
            steps.push_back(std::move(st));
        }

        // Phase B: recurse into all components simultaneously.
        std::vector<std::vector<Step>> branches;
        size_t longest = 0;
        for (const auto& comp : comps) {
            std::vector<int32_t> sorted = comp;
            std::sort(sorted.begin(), sorted.end());
            branches.push_back(solve(sorted));
            longest = std::max(longest, branches.back().size());
        }
        for (size_t k = 0; k < longest; ++k) {
            Step st;
            for (const auto& b : branches)
                if (k < b.size()) st.insert(st.end(), b[k].begin(), b[k].end());
            sort_step(st);
            steps.push_back(std::move(st));
        }
        return steps;
    }

    int32_t find_centroid(const std::vector<int32_t>& verts, const std::vector<char>& inside) {
        // Subtree sizes via DFS from the first vertex.
        std::vector<int32_t> order, par(g_.size(), -1), size(g_.size(), 1);
        std::vector<char> seen(g_.size(), 0);
        std::vector<int32_t> stack{verts[0]};
        seen[verts[0]] = 1;
        while (!stack.empty()) {
            int32_t v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int32_t u : adj_[v])
                if (inside[u] && !seen[u]) {
                    seen[u] = 1;
                    par[u] = v;
                    stack.push_back(u);
                }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (par[*it] >= 0) size[par[*it]] += size[*it];
        const int64_t n = static_cast<int64_t>(verts.size());
        int32_t best = -1;
        int64_t best_score = n + 1;
        for (int32_t v : order) {
            int64_t score = n - size[v];
            for (int32_t u : adj_[v])
                if (inside[u] && par[u] == v) score = std::max(score, (int64_t)size[u]);
            if (score < best_score) {
                best_score = score;
                best = v;
            }
        }
        return best;
    }

    const LatticeGraph& g_;
    std::vector<std::vector<int32_t>> adj_;
    std::vector<int32_t> cur_, tgt_;
    std::vector<int32_t> token_home_;
};

}  // namespace detail

// Spanning-tree routing for any connected lattice graph; the 3n ceiling is a
// hard assertion, not a tolerance.
inline Schedule route_tree(const LabeledConfig& from, const LabeledConfig& to) {
    GraphPtr g = from.graph;
    const int64_t n = static_cast<int64_t>(g->size());
    Schedule s = make_schedule(g, 3 * n);
    if (n <= 1 || from.tokens == to.tokens) return s;
    detail::TreeRouter router(*g, from.tokens, to.tokens);
    s.steps = router.run();
    if (s.length() > 3 * n)
        throw std::logic_error("route_tree exceeded the 3n ceiling: " +
                               std::to_string(s.length()) + " > " + std::to_string(3 * n));
    ValidationReport rep = validate(s, from, to);
    if (!rep.ok) throw std::logic_error("route_tree produced an invalid schedule: " + rep.message);
    return s;
}

// ---------------------------------------------------------------------------
// Rectangle routing.

namespace detail {

struct RectShape {
    int64_t p = 0;  // rows
    int64_t q = 0;  // columns
    int32_t x0 = 0, y0 = 0;
};

inline RectShape rect_shape(const LatticeGraph& g) {
    RectShape r{g.height() + 1, g.width() + 1, g.min_x(), g.min_y()};
    if (static_cast<int64_t>(g.size()) != r.p * r.q)
        throw std::invalid_argument("graph is not a full rectangle");
    return r;
}

// Cells of column x, top to bottom (canonical within-column order).
inline std::vector<Cell> column_cells(const RectShape& r, int64_t cx) {
    std::vector<Cell> cells;
    for (int64_t y = r.p - 1; y >= 0; --y)
        cells.push_back(Cell{static_cast<int32_t>(r.x0 + cx), static_cast<int32_t>(r.y0 + y)});
    return cells;
}

inline std::vector<Cell> row_cells(const RectShape& r, int64_t ry) {
    std::vector<Cell> cells;
    for (int64_t x = 0; x < r.q; ++x)
        cells.push_back(Cell{static_cast<int32_t>(r.x0 + x), static_cast<int32_t>(r.y0 + ry)});
    return cells;
}

// One perfect matching of a q x q bipartite multigraph given by counts;
// deterministic augmenting search in index order.
inline std::vector<int32_t> extract_perfect_matching(std::vector<std::vector<int32_t>>& cnt) {
    const size_t q = cnt.size();
    std::vector<int32_t> match_right(q, -1);  // right node -> left node
    std::vector<char> visited(q, 0);
    std::function<bool(size_t)> augment = [&](size_t left) -> bool {
        for (size_t right = 0; right < q; ++right) {
            if (!cnt[left][right] || visited[right]) continue;
            visited[right] = 1;
            if (match_right[right] < 0 || augment(static_cast<size_t>(match_right[right]))) {
                match_right[right] = static_cast<int32_t>(left);
                return true;
            }
        }
        return false;
    };
    for (size_t left = 0; left < q; ++left) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(left))
            throw std::logic_error("regular bipartite multigraph lost a perfect matching");
    }
    std::vector<int32_t> left_to_right(q, -1);
    for (size_t right = 0; right < q; ++right) {
        left_to_right[match_right[right]] = static_cast<int32_t>(right);
        --cnt[match_right[right]][right];
    }
    return left_to_right;
}

}  // namespace detail

// Three-phase column-row-column routing on a full p x q rectangle; phase 2
// destinations come from decomposing the column-to-column multigraph into p
// perfect matchings, one per intermediate row. Length <= 2p + q.
inline Schedule route_rect(const LabeledConfig& from, const LabeledConfig& to) {
    GraphPtr g = from.graph;
    detail::RectShape shape = detail::rect_shape(*g);
    const int64_t p = shape.p, q = shape.q;
    Schedule s = make_schedule(g, 2 * p + q);
    if (from.tokens == to.tokens) return s;

    std::vector<int64_t> target_index(g->size() + 1);
    for (size_t i = 0; i < to.tokens.size(); ++i) target_index[to.tokens[i]] = i;
    auto col_of = [&](const Cell& c) { return static_cast<int64_t>(c.x - shape.x0); };
    auto row_of = [&](const Cell& c) { return static_cast<int64_t>(c.y - shape.y0); };

    // Column-to-column token multigraph; queue per (cc, dc) in canonical order.
    std::vector<std::vector<int32_t>> cnt(q, std::vector<int32_t>(q, 0));
    std::vector<std::vector<std::vector<int32_t>>> pool(
        q, std::vector<std::vector<int32_t>>(q));
    for (size_t i = 0; i < g->size(); ++i) {
        int64_t cc = col_of(g->vertex(i));
        int64_t dc = col_of(g->vertex(target_index[from.tokens[i]]));
        ++cnt[cc][dc];
        pool[cc][dc].push_back(static_cast<int32_t>(i));
    }
    // Intermediate row assignment: matching r covers row r.
    std::vector<int64_t> mid_row(g->size(), -1), mid_col(g->size(), -1);
    for (int64_t r = 0; r < p; ++r) {
        std::vector<int32_t> l2r = detail::extract_perfect_matching(cnt);
        for (int64_t cc = 0; cc < q; ++cc) {
            int64_t dc = l2r[cc];
            std::vector<int32_t>& bucket = pool[cc][dc];
            if (bucket.empty()) throw std::logic_error("matching token pool underflow");
            int32_t vi = bucket.back();
            bucket.pop_back();
            mid_row[vi] = r;
            mid_col[vi] = cc;
        }
    }

    std::vector<int32_t> where(g->size());  // vertex -> original vertex index of token there
    std::iota(where.begin(), where.end(), 0);
    auto run_lines = [&](bool columns, auto&& rank_fn) {
        std::vector<Schedule> parts;
        for (int64_t line = 0; line < (columns ? q : p); ++line) {
            std::vector<Cell> cells =
                columns ? detail::column_cells(shape, line) : detail::row_cells(shape, line);
            std::vector<int64_t> rank(cells.size());
            for (size_t k = 0; k < cells.size(); ++k)
                rank[k] = rank_fn(where[g->index_of_checked(cells[k])]);
            Schedule part = make_schedule(make_graph({cells.begin(), cells.end()}),
                                          columns ? p : q);
            part.steps = odd_even_steps(cells, std::move(rank));
            for (const Step& st : part.steps)
                for (const Swap& sw : st)
                    std::swap(where[g->index_of_checked(sw.a)], where[g->index_of_checked(sw.b)]);
            parts.push_back(std::move(part));
        }
        Schedule merged = merge_parallel(std::move(parts));
        append_schedule(s, std::move(merged));
    };

    // Phase 1: within each column, bring tokens to their intermediate rows.
    run_lines(true, [&](int32_t vi) { return p - 1 - mid_row[vi]; });
    // Phase 2: within each row, move tokens to their destination columns.
    run_lines(false, [&](int32_t vi) {
        return col_of(g->vertex(target_index[from.tokens[vi]]));
    });
    // Phase 3: within each column, finish.
    run_lines(true, [&](int32_t vi) {
        return p - 1 - row_of(g->vertex(target_index[from.tokens[vi]]));
    });

    if (s.length() > s.declared_bound)
        throw std::logic_error("route_rect exceeded 2p+q");
    ValidationReport rep = validate(s, from, to);
    if (!rep.ok) throw std::logic_error("route_rect produced an invalid schedule: " + rep.message);
    return s;
}

namespace detail {

// Colored rectangle -> row-major order. Row phase realizes a 0-1 matrix with
// row sums equal to the current per-row black counts and column sums equal to
// row-major column counts (Ryser greedy, largest rows first, ties by index).
inline Schedule colored_rect_to_rm(const ColorConfig& cfg) {
    GraphPtr g = cfg.graph;
    RectShape shape = rect_shape(*g);
    const int64_t p = shape.p, q = shape.q;
    const int64_t t = cfg.black_count();
    Schedule s = make_schedule(g, p + q);

    ColorConfig rm = row_major_colors(g, t);
    std::vector<int64_t> col_demand(q, 0);
    for (size_t i = 0; i < g->size(); ++i)
        if (rm.black[i]) ++col_demand[g->vertex(i).x - shape.x0];

    std::vector<int64_t> row_count(p, 0);
    for (size_t i = 0; i < g->size(); ++i)
        if (cfg.black[i]) ++row_count[g->vertex(i).y - shape.y0];

    // Ryser: rows in decreasing count order land their blacks on the columns
    // with the largest remaining demand.
    std::vector<int64_t> row_order(p);
    std::iota(row_order.begin(), row_order.end(), 0);
    std::sort(row_order.begin(), row_order.end(), [&](int64_t a, int64_t b) {
        if (row_count[a] != row_count[b]) return row_count[a] > row_count[b];
        return a < b;
    });
    std::vector<std::vector<uint8_t>> matrix(p, std::vector<uint8_t>(q, 0));
    std::vector<int64_t> remaining = col_demand;
    for (int64_t ry : row_order) {
        std::vector<int64_t> cols(q);
        std::iota(cols.begin(), cols.end(), 0);
        std::sort(cols.begin(), cols.end(), [&](int64_t a, int64_t b) {
            if (remaining[a] != remaining[b]) return remaining[a] > remaining[b];
            return a < b;
        });
        for (int64_t k = 0; k < row_count[ry]; ++k) {
            if (remaining[cols[k]] <= 0)
                throw std::logic_error("row-major column demands are not realizable");
            matrix[ry][cols[k]] = 1;
            --remaining[cols[k]];
        }
    }

    std::vector<uint8_t> state(cfg.black);
    auto run_colored_lines = [&](bool columns, auto&& want_fn) {
        std::vector<Schedule> parts;
        for (int64_t line = 0; line < (columns ? q : p); ++line) {
            std::vector<Cell> cells = columns ? column_cells(shape, line) : row_cells(shape, line);
            std::vector<uint8_t> cur(cells.size()), want(cells.size());
            for (size_t k = 0; k < cells.size(); ++k) {
                cur[k] = state[g->index_of_checked(cells[k])];
                want[k] = want_fn(line, cells[k]);
            }
            Schedule part =
                make_schedule(make_graph({cells.begin(), cells.end()}), columns ? p : q);
            part.steps = colored_sequence_steps(cells, cur, want);
            for (const Step& st : part.steps)
                for (const Swap& sw : st) {
                    auto ia = g->index_of_checked(sw.a), ib = g->index_of_checked(sw.b);
                    std::swap(state[ia], state[ib]);
                }
            parts.push_back(std::move(part));
        }
        append_schedule(s, merge_parallel(std::move(parts)));
    };

    run_colored_lines(false, [&](int64_t line, const Cell& c) {
        return matrix[line][c.x - shape.x0];
    });
    run_colored_lines(true, [&](int64_t, const Cell& c) {
        return rm.black[g->index_of_checked(c)];
    });
    if (state != rm.black) throw std::logic_error("colored rectangle failed to reach row-major");
    return s;
}

}  // namespace detail

// Unlabeled rectangle routing through the row-major middle; <= 2(p+q) steps.
inline Schedule route_rect_unlabeled(const ColorConfig& from, const ColorConfig& to) {
    GraphPtr g = from.graph;
    detail::RectShape shape = detail::rect_shape(*g);
    if (from.black_count() != to.black_count())
        throw std::invalid_argument("route_rect_unlabeled: black counts differ");
    Schedule s = make_schedule(g, 2 * (shape.p + shape.q));
    if (from.black == to.black) return s;
    Schedule fwd = detail::colored_rect_to_rm(from);
    Schedule bwd = detail::colored_rect_to_rm(to);
    append_schedule(s, std::move(fwd));
    append_schedule(s, reverse(std::move(bwd)));
    if (s.length() > s.declared_bound)
        throw std::logic_error("route_rect_unlabeled exceeded 2(p+q)");
    ValidationReport rep = validate(s, from, to);
    if (!rep.ok)
        throw std::logic_error("route_rect_unlabeled produced an invalid schedule: " + rep.message);
    return s;
}

}  // namespace gridroute

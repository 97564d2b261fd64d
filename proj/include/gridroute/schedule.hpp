#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gridroute/lattice.hpp"

namespace gridroute {

struct Swap {
    Cell a, b;
};

inline Swap make_swap(Cell a, Cell b) {
    if (canonical_less(b, a)) std::swap(a, b);
    return Swap{a, b};
}

inline bool swap_less(const Swap& l, const Swap& r) {
    if (l.a != r.a) return canonical_less(l.a, r.a);
    return canonical_less(l.b, r.b);
}

// A routing step: pairwise vertex-disjoint unit-distance pairs, each swapped
// simultaneously. Kept sorted for reproducible serialization.
using Step = std::vector<Swap>;

inline void sort_step(Step& s) { std::sort(s.begin(), s.end(), swap_less); }

struct Schedule {
    GraphPtr graph;
    std::vector<Step> steps;
    int64_t declared_bound = 0;

    int64_t length() const { return static_cast<int64_t>(steps.size()); }
};

inline Schedule make_schedule(GraphPtr g, int64_t declared) {
    return Schedule{std::move(g), {}, declared};
}

// Token ids 1..n in canonical vertex order (rows top to bottom, then left to
// right); tokens[i] is the token on canonical vertex i.
struct LabeledConfig {
    GraphPtr graph;
    std::vector<int32_t> tokens;

    bool operator==(const LabeledConfig& o) const { return tokens == o.tokens; }
};

struct ColorConfig {
    GraphPtr graph;
    std::vector<uint8_t> black;

    int64_t black_count() const { return std::count(black.begin(), black.end(), uint8_t(1)); }
    bool operator==(const ColorConfig& o) const { return black == o.black; }
};

inline LabeledConfig identity_config(GraphPtr g) {
    LabeledConfig c{g, std::vector<int32_t>(g->size())};
    std::iota(c.tokens.begin(), c.tokens.end(), 1);
    return c;
}

// Row-major order: the first t canonical vertices carry black tokens.
inline ColorConfig row_major_colors(GraphPtr g, int64_t t) {
    if (t < 0 || t > static_cast<int64_t>(g->size()))
        throw std::invalid_argument("row-major black count out of range");
    ColorConfig c{g, std::vector<uint8_t>(g->size(), 0)};
    std::fill(c.black.begin(), c.black.begin() + t, uint8_t(1));
    return c;
}

struct StepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Applies steps to per-vertex values with full validation; reusable so the
// disjointness scratch is not reallocated per step.
class StepApplier {
   public:
    explicit StepApplier(const LatticeGraph& g) : g_(g), stamp_(g.size(), 0) {}

    template <typename T>
    void apply(std::vector<T>& values, const Step& step) {
        if (values.size() != g_.size()) throw StepError("config does not match graph");
        ++tick_;
        for (const Swap& s : step) {
            int64_t dx = std::abs(s.a.x - s.b.x), dy = std::abs(s.a.y - s.b.y);
            if (dx + dy != 1) throw StepError("step pair is not a unit-distance edge");
            int32_t i = g_.index_of(s.a), j = g_.index_of(s.b);
            if (i < 0 || j < 0) throw StepError("step pair leaves the graph");
            if (stamp_[i] == tick_ || stamp_[j] == tick_)
                throw StepError("step pairs are not vertex-disjoint");
            stamp_[i] = stamp_[j] = tick_;
            std::swap(values[i], values[j]);
        }
    }

   private:
    const LatticeGraph& g_;
    std::vector<uint32_t> stamp_;
    uint32_t tick_ = 0;
};

inline LabeledConfig apply(const LabeledConfig& cfg, const Step& step) {
    LabeledConfig out = cfg;
    StepApplier ap(*cfg.graph);
    ap.apply(out.tokens, step);
    return out;
}

inline ColorConfig apply(const ColorConfig& cfg, const Step& step) {
    ColorConfig out = cfg;
    StepApplier ap(*cfg.graph);
    ap.apply(out.black, step);
    return out;
}

struct ValidationReport {
    bool ok = false;
    int64_t failed_step = -1;  // -1: endpoint mismatch or fine
    std::string message;
};

namespace detail {

template <typename ValueVec>
ValidationReport validate_values(const Schedule& sched, ValueVec current, const ValueVec& want) {
    StepApplier ap(*sched.graph);
    for (size_t i = 0; i < sched.steps.size(); ++i) {
        try {
            ap.apply(current, sched.steps[i]);
        } catch (const StepError& e) {
            return {false, static_cast<int64_t>(i),
                    "step " + std::to_string(i) + ": " + e.what()};
        }
    }
    if (current != want) return {false, -1, "final configuration does not match target"};
    return {true, -1, ""};
}

}  // namespace detail

inline ValidationReport validate(const Schedule& sched, const LabeledConfig& from,
                                 const LabeledConfig& to) {
    if (from.tokens.size() != sched.graph->size() || to.tokens.size() != sched.graph->size())
        return {false, -1, "configuration size does not match graph"};
    return detail::validate_values(sched, from.tokens, to.tokens);
}

inline ValidationReport validate(const Schedule& sched, const ColorConfig& from,
                                 const ColorConfig& to) {
    if (from.black.size() != sched.graph->size() || to.black.size() != sched.graph->size())
        return {false, -1, "configuration size does not match graph"};
    return detail::validate_values(sched, from.black, to.black);
}

// Each step is its own inverse, so reversing the step order reverses the route.
inline Schedule reverse(Schedule s) {
    std::reverse(s.steps.begin(), s.steps.end());
    return s;
}

// Runs schedules on pairwise vertex-disjoint subgraphs simultaneously:
// step i of the result is the union of step i of every input.
inline Schedule merge_parallel(std::vector<Schedule> parts) {
    std::vector<Cell> cells;
    size_t total = 0;
    int64_t declared = 0;
    size_t longest = 0;
    for (const Schedule& p : parts) {
        total += p.graph->size();
        cells.insert(cells.end(), p.graph->vertices().begin(), p.graph->vertices().end());
        declared = std::max(declared, p.declared_bound);
        longest = std::max(longest, p.steps.size());
    }
    GraphPtr merged_graph = make_graph(std::move(cells));
    if (merged_graph->size() != total)
        throw std::invalid_argument("merge_parallel requires vertex-disjoint subgraphs");
    Schedule out = make_schedule(merged_graph, declared);
    out.steps.resize(longest);
    for (Schedule& p : parts)
        for (size_t i = 0; i < p.steps.size(); ++i)
            out.steps[i].insert(out.steps[i].end(), p.steps[i].begin(), p.steps[i].end());
    for (Step& s : out.steps) sort_step(s);
    return out;
}

// Maps every vertex of every step through a lattice isometry. Validation
// commutes with conjugation.
inline Schedule conjugate(const Schedule& s, const IsoTransform& t) {
    Schedule out = make_schedule(make_graph([&] {
                                     std::vector<Cell> cells(s.graph->vertices().begin(),
                                                             s.graph->vertices().end());
                                     for (Cell& c : cells) c = t.apply(c);
                                     return cells;
                                 }()),
                                 s.declared_bound);
    if (out.graph->size() != s.graph->size())
        throw std::invalid_argument("conjugate: transform is not a bijection on the graph");
    out.steps.reserve(s.steps.size());
    for (const Step& st : s.steps) {
        Step m;
        m.reserve(st.size());
        for (const Swap& sw : st) m.push_back(make_swap(t.apply(sw.a), t.apply(sw.b)));
        sort_step(m);
        out.steps.push_back(std::move(m));
    }
    return out;
}

// Transports a config through a lattice isometry onto the transformed graph.
inline LabeledConfig conjugate(const LabeledConfig& cfg, const IsoTransform& t, GraphPtr target) {
    LabeledConfig out{target, std::vector<int32_t>(target->size())};
    for (size_t i = 0; i < cfg.graph->size(); ++i) {
        int32_t j = target->index_of_checked(t.apply(cfg.graph->vertex(i)));
        out.tokens[j] = cfg.tokens[i];
    }
    return out;
}

inline ColorConfig conjugate(const ColorConfig& cfg, const IsoTransform& t, GraphPtr target) {
    ColorConfig out{target, std::vector<uint8_t>(target->size())};
    for (size_t i = 0; i < cfg.graph->size(); ++i) {
        int32_t j = target->index_of_checked(t.apply(cfg.graph->vertex(i)));
        out.black[j] = cfg.black[i];
    }
    return out;
}

// Appends a sub-schedule that lives on a subgraph of acc's graph.
inline void append_schedule(Schedule& acc, Schedule part) {
    for (const Cell& c : part.graph->vertices())
        if (!acc.graph->contains(c))
            throw std::invalid_argument("appended schedule leaves the host graph");
    acc.steps.insert(acc.steps.end(), std::make_move_iterator(part.steps.begin()),
                     std::make_move_iterator(part.steps.end()));
}

// Restriction of a configuration to a subgraph.
inline LabeledConfig restrict_config(const LabeledConfig& cfg, GraphPtr sub) {
    LabeledConfig out{sub, std::vector<int32_t>(sub->size())};
    for (size_t i = 0; i < sub->size(); ++i)
        out.tokens[i] = cfg.tokens[cfg.graph->index_of_checked(sub->vertex(i))];
    return out;
}

inline ColorConfig restrict_config(const ColorConfig& cfg, GraphPtr sub) {
    ColorConfig out{sub, std::vector<uint8_t>(sub->size())};
    for (size_t i = 0; i < sub->size(); ++i)
        out.black[i] = cfg.black[cfg.graph->index_of_checked(sub->vertex(i))];
    return out;
}

// Largest per-token displacement between two labeled configs: a lower bound
// on any schedule length between them (a token travels one edge per step).
inline int64_t max_token_displacement(const LabeledConfig& from, const LabeledConfig& to) {
    const LatticeGraph& g = *from.graph;
    std::vector<Cell> pos(g.size() + 1);
    for (size_t i = 0; i < to.tokens.size(); ++i) pos[to.tokens[i]] = to.graph->vertex(i);
    int64_t best = 0;
    for (size_t i = 0; i < from.tokens.size(); ++i) {
        const Cell a = g.vertex(i), b = pos[from.tokens[i]];
        best = std::max(best, static_cast<int64_t>(std::abs(a.x - b.x)) + std::abs(a.y - b.y));
    }
    return best;
}

}  // namespace gridroute

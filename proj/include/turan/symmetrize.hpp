#pragma once

// Zykov symmetrization and its book-safe restricted variant. A step
// replaces the neighborhood of a source vertex by that of a non-adjacent
// target. The driver scans pairs (u, v) lexicographically each round and
// applies the first applicable one, moving the vertex with fewer copies of
// H toward the one with more (ties: higher index to lower). In restricted
// mode only directions whose target is not a rootlet of any B_{r,s+1} are
// eligible, and among eligible directions the larger target count wins.

#include <utility>
#include <vector>

#include "turan/counting.hpp"
#include "turan/freeness.hpp"
#include "turan/graph.hpp"

namespace turan {

inline Graph symmetrize(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw argument_error("vertex index out of range");
    if (u == v) throw argument_error("symmetrize needs two distinct vertices");
    if (g.has_edge(u, v))
        throw argument_error("symmetrize needs a non-adjacent pair");
    GraphBuilder b(g.order());
    for (int x = 0; x < g.order(); ++x) {
        if (x == u) continue;
        for (int y : g.neighbors(x))
            if (x < y && y != u) b.add_edge(x, y);
    }
    for (int w : g.neighbors(v)) b.add_edge(u, w);
    return std::move(b).build();
}

inline bool restricted_step_allowed(const Graph& g, int u, int v, int r,
                                    int s) {
    if (u == v) throw argument_error("need two distinct vertices");
    if (g.has_edge(u, v)) return false;
    return !is_rootlet(g, v, r, s + 1);
}

struct SymMode {
    bool restricted = false;
    int r = 0, s = 0;

    static SymMode plain() { return {}; }
    static SymMode restricted_mode(int r, int s) {
        if (r < 1 || s < 0 || s >= r)
            throw argument_error("restricted mode needs 0 <= s < r");
        return {true, r, s};
    }
};

struct SymStep {
    int source = -1, target = -1;
    Count count_before, count_after;
};

enum class SymTermination { FixedPoint, CapReached };

struct SymmetrizationTrace {
    std::vector<SymStep> steps;
    Graph final_graph;
    SymTermination terminated = SymTermination::FixedPoint;
};

inline SymmetrizationTrace run_symmetrization(const Graph& g, const Graph& h,
                                              const ForbiddenPattern& constraint,
                                              const SymMode& mode,
                                              long long cap = 0) {
    if (contains(g, constraint))
        throw argument_error("input graph already contains the constraint pattern");
    long long n = g.order();
    if (cap <= 0) cap = 10 * n * n;

    SymmetrizationTrace trace;
    Graph cur = g;
    Count cur_count = count_copies(cur, h);
    bool progressed = true;
    while (progressed) {
        if (static_cast<long long>(trace.steps.size()) >= cap) {
            trace.terminated = SymTermination::CapReached;
            trace.final_graph = cur;
            return trace;
        }
        progressed = false;
        for (int u = 0; u < cur.order() && !progressed; ++u) {
            for (int v = u + 1; v < cur.order() && !progressed; ++v) {
                if (cur.has_edge(u, v) || cur.rows_equal(u, v)) continue;
                bool to_v = !mode.restricted ||
                            !is_rootlet(cur, v, mode.r, mode.s + 1);
                bool to_u = !mode.restricted ||
                            !is_rootlet(cur, u, mode.r, mode.s + 1);
                if (!to_v && !to_u) continue;
                int source, target;
                if (to_v && to_u) {
                    Count du = copies_at_vertex(cur, h, u);
                    Count dv = copies_at_vertex(cur, h, v);
                    if (dv > du) {
                        source = u;
                        target = v;
                    } else {
                        source = v;  // du >= dv: ties move the higher index down
                        target = u;
                    }
                } else if (to_v) {
                    source = u;
                    target = v;
                } else {
                    source = v;
                    target = u;
                }
                Graph next = symmetrize(cur, source, target);
                if (contains(next, constraint))
                    throw consistency_error(
                        "symmetrization step broke the constraint pattern "
                        "(mode does not protect this pattern)");
                Count next_count = count_copies(next, h);
                trace.steps.push_back(
                    SymStep{source, target, cur_count, next_count});
                cur = std::move(next);
                cur_count = std::move(next_count);
                progressed = true;
            }
        }
    }
    trace.final_graph = cur;
    trace.terminated = SymTermination::FixedPoint;
    return trace;
}

}  // namespace turan
